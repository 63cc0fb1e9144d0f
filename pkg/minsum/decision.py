"""
Decision rule: beliefs, argmax sets and the parity tie-break.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from factor_graph.extended import NEG_INF, ExtendedValue, format_extended
from instances.model import Sense
from minsum.messages import MessageState, Table
from utils.errors import InfeasibleRootError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decision:
    """
    Output of min-sum after t iterations.

    delta[v] is the set of optimal values of belief mu_v; x_hat picks one by
    the parity of t. For packing x_hat is max(delta) at even t and min(delta)
    at odd t; covering results are reported in covering coordinates, where
    the rule is mirrored.
    """

    t: int
    sense: Sense
    mu_v: tuple[Table, ...]
    mu_max: tuple[ExtendedValue, ...]
    delta: tuple[frozenset[int], ...]
    x_hat: tuple[int, ...]

    @property
    def is_unambiguous(self) -> bool:
        """Every delta set is a singleton."""
        return all(len(d) == 1 for d in self.delta)

    @property
    def parity(self) -> str:
        return "even" if self.t % 2 == 0 else "odd"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t": self.t,
            "sense": self.sense.value,
            "x_hat": list(self.x_hat),
            "delta": [sorted(d) for d in self.delta],
            "mu_v": [[format_extended(v) for v in table] for table in self.mu_v],
            "mu_max": [format_extended(v) for v in self.mu_max],
        }


def beliefs(state: MessageState) -> tuple[Table, ...]:
    """mu_v(beta) = w_v * beta + sum over C in N(v) of mu_{C->v}(beta)."""
    fg = state.fg
    out = []
    for i in range(fg.n):
        incoming = [state.con_to_var[(i, j)] for j in fg.var_neighbors[i]]
        table = []
        for beta in range(fg.X[i] + 1):
            value: ExtendedValue = fg.phi(i, beta)
            for t in incoming:
                value = value + t[beta]
            table.append(value)
        out.append(tuple(table))
    return tuple(out)


def decide(state: MessageState, t: Optional[int] = None) -> Decision:
    """
    Apply the decision rule to the tables after t iterations.

    Args:
        state: Message state
        t: Iteration count used for the tie-break (defaults to state.iteration)

    Returns:
        Decision for the packing instance of state.fg

    Raises:
        InfeasibleRootError: if every belief of some variable is -inf
    """
    t = state.iteration if t is None else t
    mu = beliefs(state)

    mu_max, delta, x_hat = [], [], []
    for i, table in enumerate(mu):
        top = max(table)
        if top == NEG_INF:
            logger.error(f"Variable v{i} has no feasible value after {t} iterations")
            raise InfeasibleRootError(f"every belief of variable {i} is -inf at t={t}")
        chosen = frozenset(beta for beta, value in enumerate(table) if value == top)
        mu_max.append(top)
        delta.append(chosen)
        x_hat.append(max(chosen) if t % 2 == 0 else min(chosen))

    return Decision(
        t=t, sense=Sense.PACKING, mu_v=mu, mu_max=tuple(mu_max),
        delta=tuple(delta), x_hat=tuple(x_hat),
    )


def mirror_decision(decision: Decision, X: tuple[int, ...]) -> Decision:
    """
    Express a packing decision of the complemented instance in covering coordinates.

    Value z of the covering variable corresponds to beta = X_v - z, so tables
    are reversed and delta sets and x_hat are complemented.
    """
    return Decision(
        t=decision.t,
        sense=Sense.COVERING,
        mu_v=tuple(tuple(reversed(table)) for table in decision.mu_v),
        mu_max=decision.mu_max,
        delta=tuple(frozenset(Xi - beta for beta in d) for Xi, d in zip(X, decision.delta)),
        x_hat=tuple(Xi - x for Xi, x in zip(X, decision.x_hat)),
    )
