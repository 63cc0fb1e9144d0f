"""
Message tables of the min-sum algorithm for packing.

Every edge (v_i, C_j) carries two tables indexed by beta in {0, ..., X_i}:
var_to_con[(i, j)] and con_to_var[(i, j)]. Values are exact Fractions or -inf.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from factor_graph.extended import NEG_INF, ExtendedValue, is_finite
from factor_graph.graph import Edge, FactorGraph


logger = logging.getLogger(__name__)

Table = tuple[ExtendedValue, ...]
Tables = dict[Edge, Table]


@dataclass
class MessageState:
    """Message tables after `iteration` completed iterations."""

    fg: FactorGraph
    iteration: int
    var_to_con: Tables
    con_to_var: Tables
    history: Optional[list[tuple[int, Tables, Tables]]] = field(default=None, repr=False)

    def snapshot(self) -> None:
        if self.history is not None:
            self.history.append((self.iteration, dict(self.var_to_con), dict(self.con_to_var)))


def init_messages(fg: FactorGraph, keep_history: bool = False) -> MessageState:
    """Zero initialization: every constraint-to-variable entry is 0, no variable-to-constraint tables yet."""
    con_to_var = {(i, j): tuple(Fraction(0) for _ in range(fg.X[i] + 1)) for i, j in fg.edges}
    state = MessageState(
        fg=fg, iteration=0, var_to_con={}, con_to_var=con_to_var,
        history=[] if keep_history else None,
    )
    state.snapshot()
    return state


def map_edges(func: Callable[[Edge], Table], edges: Sequence[Edge], workers: int) -> Tables:
    if workers > 1 and len(edges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tables = list(pool.map(func, edges))
    else:
        tables = [func(e) for e in edges]
    return dict(zip(edges, tables))


def variable_message(fg: FactorGraph, con_to_var: Tables, edge: Edge) -> Table:
    """phi_v(beta) plus the incoming tables of every other constraint of v."""
    i, j = edge
    others = [con_to_var[(i, k)] for k in fg.var_neighbors[i] if k != j]
    out = []
    for beta in range(fg.X[i] + 1):
        value: ExtendedValue = fg.phi(i, beta)
        for table in others:
            value = value + table[beta]
        out.append(value)
    return tuple(out)


def budgeted_best(tables: Sequence[Table], cap: int) -> list[ExtendedValue]:
    """
    Bounded knapsack over a list of per-neighbour tables.

    Returns best[s] for 0 <= s <= cap: the largest sum of table[z_u] over
    choices with sum of z_u equal to s, or -inf when s is unreachable.
    """
    best: list[ExtendedValue] = [Fraction(0)] + [NEG_INF] * cap
    for table in tables:
        merged: list[ExtendedValue] = [NEG_INF] * (cap + 1)
        for s, base in enumerate(best):
            if base == NEG_INF:
                continue
            for z, value in enumerate(table):
                if s + z > cap:
                    break
                candidate = base + value
                if candidate > merged[s + z]:
                    merged[s + z] = candidate
        best = merged
    return best


def constraint_message(fg: FactorGraph, var_to_con: Tables, edge: Edge) -> Table:
    """
    Max over integral z on N(C)\\{v} with sum(z) <= budget - beta of sum of incoming tables.

    An empty feasible set gives -inf; an empty neighbourhood contributes 0.
    """
    i, j = edge
    budget = fg.budgets[j]
    tables = [var_to_con[(u, j)] for u in fg.rows[j] if u != i]
    cap = min(budget, sum(len(t) - 1 for t in tables))

    best = budgeted_best(tables, cap)
    # prefix maximum turns "sum equal to s" into "sum at most s"
    prefix: list[ExtendedValue] = []
    running: ExtendedValue = NEG_INF
    for value in best:
        running = max(running, value)
        prefix.append(running)

    out = []
    for beta in range(fg.X[i] + 1):
        remaining = budget - beta
        out.append(NEG_INF if remaining < 0 else prefix[min(remaining, cap)])
    return tuple(out)


def variable_to_constraint_step(state: MessageState, workers: int = 1) -> Tables:
    """All variable-to-constraint tables of iteration state.iteration + 1."""
    fg, incoming = state.fg, state.con_to_var
    return map_edges(lambda e: variable_message(fg, incoming, e), fg.edges, workers)


def constraint_to_variable_step(state: MessageState, workers: int = 1) -> Tables:
    """All constraint-to-variable tables from the variable-to-constraint tables held in state."""
    fg, incoming = state.fg, state.var_to_con
    return map_edges(lambda e: constraint_message(fg, incoming, e), fg.edges, workers)


def normalize_table(table: Table) -> Table:
    """Subtract the largest finite entry; all-infinite tables are returned unchanged."""
    finite = [v for v in table if is_finite(v)]
    if not finite:
        return table
    top = max(finite)
    return tuple(v - top if is_finite(v) else v for v in table)


def advance(state: MessageState, workers: int = 1, normalize: bool = False) -> MessageState:
    """
    Run one full iteration (both half-steps) and return the new state.

    The two halves are separated by a barrier: every constraint message reads
    the complete variable tables of the same iteration.
    """
    new_state = MessageState(
        fg=state.fg,
        iteration=state.iteration + 1,
        var_to_con=variable_to_constraint_step(state, workers),
        con_to_var={},
        history=state.history,
    )
    con_to_var = constraint_to_variable_step(new_state, workers)
    if normalize:
        con_to_var = {e: normalize_table(t) for e, t in con_to_var.items()}
    new_state.con_to_var = con_to_var
    new_state.snapshot()
    logger.debug(f"Completed min-sum iteration {new_state.iteration}")
    return new_state
