"""
Factor graph model of a packing or covering instance.

Variable vertices ("v", i) carry the box bound X_i and the coefficient w_i of
phi_i(beta) = w_i * beta. Constraint vertices ("C", j) carry the integer
budget floor(b_j) (packing) or ceil(b_j) (covering). Edge (v_i, C_j) exists
iff A_ji = 1.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

import networkx as nx

from factor_graph.extended import NEG_INF, POS_INF, ExtendedValue
from instances.model import ProblemInstance, Sense
from utils.errors import DimensionError


logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def variable_node(i: int) -> tuple[str, int]:
    return ("v", i)


def constraint_node(j: int) -> tuple[str, int]:
    return ("C", j)


@dataclass(frozen=True)
class FactorGraph:
    """Immutable bipartite factor graph of an instance."""

    instance: ProblemInstance
    graph: nx.Graph = field(repr=False, compare=False)
    var_neighbors: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    budgets: tuple[int, ...]

    @property
    def sense(self) -> Sense:
        return self.instance.sense

    @property
    def n(self) -> int:
        return self.instance.n

    @property
    def m(self) -> int:
        return self.instance.m

    @property
    def X(self) -> tuple[int, ...]:
        return self.instance.X

    @property
    def w(self) -> tuple[Fraction, ...]:
        return self.instance.w

    def phi(self, i: int, beta: int) -> Fraction:
        """Variable function w_i * beta."""
        return self.instance.w[i] * beta

    def to_dot(self) -> str:
        """DOT text with vertices named v<i> and C<j>."""
        lines = ["graph factor_graph {"]
        for i in range(self.n):
            lines.append(f'  v{i} [shape=circle, label="v{i} X={self.X[i]} w={self.w[i]}"];')
        for j in range(self.m):
            lines.append(f'  C{j} [shape=box, label="C{j} b={self.budgets[j]}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -- C{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_factor_graph(inst: ProblemInstance) -> FactorGraph:
    """
    Build the factor graph of an instance.

    Args:
        inst: Validated instance

    Returns:
        FactorGraph with n variable vertices, m constraint vertices and one
        edge per 1 entry of A
    """
    g = nx.Graph()
    for i in range(inst.n):
        g.add_node(variable_node(i), kind="variable", bound=inst.X[i], weight=inst.w[i])
    budgets = inst.budgets()
    for j in range(inst.m):
        g.add_node(constraint_node(j), kind="constraint", budget=budgets[j], sense=inst.sense.value)

    edges = []
    for j, row in enumerate(inst.rows):
        for i in row:
            g.add_edge(variable_node(i), constraint_node(j))
            edges.append((i, j))

    fg = FactorGraph(
        instance=inst,
        graph=g,
        var_neighbors=inst.columns(),
        rows=inst.rows,
        edges=tuple(edges),
        budgets=budgets,
    )
    logger.debug(f"Built factor graph: {inst.n} variables, {inst.m} constraints, {len(edges)} edges")
    return fg


def eval_factor(fg: FactorGraph, j: int, y: Union[Mapping[int, int], Sequence[int]]) -> ExtendedValue:
    """
    Evaluate the factor function of constraint C_j.

    Args:
        fg: Factor graph
        j: Constraint index
        y: Values of the neighbours of C_j, either {variable: value} or a
           sequence aligned with the sorted row

    Returns:
        0 when the row is satisfied, -inf (packing) or +inf (covering) otherwise

    Raises:
        DimensionError: when y does not assign exactly the neighbours of C_j
    """
    row = fg.rows[j]
    if isinstance(y, Mapping):
        if set(y) != set(row):
            raise DimensionError(f"constraint C{j} expects values for {list(row)}, got {sorted(y)}")
        total = sum(y[i] for i in row)
    else:
        if len(y) != len(row):
            raise DimensionError(f"constraint C{j} has {len(row)} neighbours, got {len(y)} values")
        total = sum(y)

    if fg.sense == Sense.PACKING:
        return Fraction(0) if total <= fg.budgets[j] else NEG_INF
    return Fraction(0) if total >= fg.budgets[j] else POS_INF


def objective(fg: FactorGraph, a: Sequence[int]) -> ExtendedValue:
    """
    Sum of all variable and factor functions at an integral assignment.

    Returns:
        w.a when a satisfies every row, -inf (packing) / +inf (covering) otherwise

    Raises:
        DimensionError: if len(a) != n
    """
    if len(a) != fg.n:
        raise DimensionError(f"assignment has length {len(a)}, factor graph has {fg.n} variables")
    total: ExtendedValue = sum((fg.phi(i, a[i]) for i in range(fg.n)), Fraction(0))
    for j, row in enumerate(fg.rows):
        total = total + eval_factor(fg, j, [a[i] for i in row])
    return total
