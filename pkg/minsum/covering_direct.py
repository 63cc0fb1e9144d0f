"""
Direct min-sum for covering (minimisation form, no complementation).

Factor functions are 0 on satisfied rows and +inf otherwise. Messages
minimise; delta is the argmin set and x_hat is min(delta) at even t and
max(delta) at odd t. Tables differ from the complemented run only by
per-table constants, so delta and x_hat agree with run_minsum_covering.
"""

import logging
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from config.settings import settings
from factor_graph.extended import POS_INF, ExtendedValue
from factor_graph.graph import Edge, FactorGraph, build_factor_graph
from instances.model import ProblemInstance, Sense
from minsum.decision import Decision
from minsum.messages import Table, Tables, map_edges, variable_message
from utils.errors import InfeasibleRootError, ParameterRangeError, SenseError


logger = logging.getLogger(__name__)


def _exact_sum_min(tables: Sequence[Table]) -> list[ExtendedValue]:
    """least[s]: smallest sum of table[z_u] with sum of z_u equal to s."""
    total = sum(len(t) - 1 for t in tables)
    least: list[ExtendedValue] = [Fraction(0)] + [POS_INF] * total
    for table in tables:
        merged: list[ExtendedValue] = [POS_INF] * (total + 1)
        for s, base in enumerate(least):
            if base == POS_INF:
                continue
            for z, value in enumerate(table):
                candidate = base + value
                if candidate < merged[s + z]:
                    merged[s + z] = candidate
        least = merged
    return least


def _constraint_message(fg: FactorGraph, var_to_con: Tables, edge: Edge) -> Table:
    """Min over z on N(C)\\{v} with sum(z) >= budget - beta; +inf when no z reaches the demand."""
    i, j = edge
    demand = fg.budgets[j]
    least = _exact_sum_min([var_to_con[(u, j)] for u in fg.rows[j] if u != i])

    # suffix minimum turns "sum equal to s" into "sum at least s"
    suffix: list[ExtendedValue] = [POS_INF] * len(least)
    running: ExtendedValue = POS_INF
    for s in range(len(least) - 1, -1, -1):
        running = min(running, least[s])
        suffix[s] = running

    out = []
    for beta in range(fg.X[i] + 1):
        need = max(demand - beta, 0)
        out.append(suffix[need] if need < len(suffix) else POS_INF)
    return tuple(out)


class DirectCoveringMinSum:
    """Min-sum on a covering factor graph, minimising directly."""

    def __init__(self, fg: FactorGraph, workers: Optional[int] = None):
        if fg.sense != Sense.COVERING:
            raise SenseError("DirectCoveringMinSum runs on covering factor graphs")
        self.fg = fg
        self.workers = settings.minsum_workers if workers is None else workers
        self.iteration = 0
        self.con_to_var: Tables = {
            (i, j): tuple(Fraction(0) for _ in range(fg.X[i] + 1)) for i, j in fg.edges
        }
        self.var_to_con: Tables = {}

    def step(self) -> None:
        fg = self.fg
        self.var_to_con = map_edges(lambda e: variable_message(fg, self.con_to_var, e), fg.edges, self.workers)
        var_to_con = self.var_to_con
        self.con_to_var = map_edges(lambda e: _constraint_message(fg, var_to_con, e), fg.edges, self.workers)
        self.iteration += 1

    def decide(self) -> Decision:
        fg, t = self.fg, self.iteration
        mu_v, mu_min, delta, x_hat = [], [], [], []
        for i in range(fg.n):
            incoming = [self.con_to_var[(i, j)] for j in fg.var_neighbors[i]]
            table = []
            for beta in range(fg.X[i] + 1):
                value: ExtendedValue = fg.phi(i, beta)
                for msg in incoming:
                    value = value + msg[beta]
                table.append(value)
            low = min(table)
            if low == POS_INF:
                raise InfeasibleRootError(f"every belief of variable {i} is +inf at t={t}")
            chosen = frozenset(beta for beta, value in enumerate(table) if value == low)
            mu_v.append(tuple(table))
            mu_min.append(low)
            delta.append(chosen)
            x_hat.append(min(chosen) if t % 2 == 0 else max(chosen))
        return Decision(
            t=t, sense=Sense.COVERING, mu_v=tuple(mu_v), mu_max=tuple(mu_min),
            delta=tuple(delta), x_hat=tuple(x_hat),
        )

    def iterate(self, t_max: int) -> Iterator[Decision]:
        while self.iteration < t_max:
            self.step()
            yield self.decide()


def run_minsum_covering_direct(inst: ProblemInstance, t: int, workers: Optional[int] = None) -> Decision:
    """
    Direct min-sum on a covering instance for exactly t iterations.

    Decision.mu_max holds the minimum belief (the optimum in minimisation form).
    """
    if inst.sense != Sense.COVERING:
        raise SenseError("run_minsum_covering_direct expects a covering instance")
    if t < 0:
        raise ParameterRangeError(f"iteration count must be >= 0, got {t}")
    engine = DirectCoveringMinSum(build_factor_graph(inst), workers)
    for _ in range(t):
        engine.step()
    decision = engine.decide()
    logger.debug(f"Direct covering min-sum t={t}: x_hat={decision.x_hat}")
    return decision
