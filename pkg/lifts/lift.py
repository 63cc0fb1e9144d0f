"""
M-lifts (graph covers) given by one permutation per base edge.

Lifted vertices are (base vertex, copy) pairs. For an oriented base edge
(u, v) with permutation p, the lifted edges are ((u, a), (v, p[a])), so the
edges between two fibers form a perfect matching. For factor-graph bases the
edges are oriented variable -> constraint in row-major order and the lift
carries the lifted ProblemInstance: variable (v_i, a) becomes index i*M + a
and constraint (C_j, k) becomes j*M + k.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Optional, Sequence, Union

import networkx as nx

from factor_graph.graph import FactorGraph, build_factor_graph, constraint_node, variable_node
from factor_graph.girth import girth
from instances.model import ProblemInstance
from utils.errors import InvalidAssignmentError, MalformedPermutationError


logger = logging.getLogger(__name__)

BaseEdge = tuple[Hashable, Hashable]
Permutation = tuple[int, ...]


@dataclass(frozen=True)
class Lift:
    """An M-fold cover of a base graph."""

    base: nx.Graph = field(repr=False, compare=False)
    fold: int
    edges: tuple[BaseEdge, ...]
    perms: tuple[Permutation, ...]
    graph: nx.Graph = field(repr=False, compare=False)
    factor_graph: Optional[FactorGraph] = field(default=None, repr=False, compare=False)
    instance: Optional[ProblemInstance] = field(default=None, repr=False, compare=False)
    girth_roots: Optional[tuple[Hashable, ...]] = field(default=None, repr=False, compare=False)

    def fiber(self, v: Hashable) -> list[tuple[Hashable, int]]:
        return [(v, a) for a in range(self.fold)]

    @staticmethod
    def project(node: tuple[Hashable, int]) -> Hashable:
        return node[0]

    def lifted_factor_graph(self) -> FactorGraph:
        if self.instance is None:
            raise ValueError("lift of a plain graph has no lifted instance")
        return build_factor_graph(self.instance)

    def girth(self):
        """Girth of the lifted graph; one BFS root per fiber for fiber-transitive lifts."""
        return girth(self.graph, self.girth_roots)


def _oriented_edges(base: Union[FactorGraph, nx.Graph]) -> tuple[BaseEdge, ...]:
    if isinstance(base, FactorGraph):
        return tuple((variable_node(i), constraint_node(j)) for i, j in base.edges)
    return tuple(base.edges())


def _check_perms(perms: Sequence[Sequence[int]], count: int, M: int) -> tuple[Permutation, ...]:
    if M < 1:
        raise MalformedPermutationError(f"fold must be >= 1, got {M}")
    if len(perms) != count:
        raise MalformedPermutationError(f"expected {count} permutations (one per base edge), got {len(perms)}")
    checked = []
    identity = list(range(M))
    for e, perm in enumerate(perms):
        perm = tuple(int(x) for x in perm)
        if sorted(perm) != identity:
            raise MalformedPermutationError(f"permutation {e} is not a permutation of 0..{M - 1}: {list(perm)}")
        checked.append(perm)
    return tuple(checked)


def lift_instance(fg: FactorGraph, M: int, perms: Sequence[Permutation]) -> ProblemInstance:
    """ProblemInstance of the lifted factor graph (variable i*M + a, constraint j*M + k)."""
    inst = fg.instance
    rows: list[list[int]] = [[] for _ in range(inst.m * M)]
    for (i, j), perm in zip(fg.edges, perms):
        for a in range(M):
            rows[j * M + perm[a]].append(i * M + a)
    return ProblemInstance(
        n=inst.n * M,
        m=inst.m * M,
        rows=rows,
        b=tuple(bj for bj in inst.b for _ in range(M)),
        w=tuple(wi for wi in inst.w for _ in range(M)),
        X=tuple(Xi for Xi in inst.X for _ in range(M)),
        sense=inst.sense,
    )


def build_lift(
    base: Union[FactorGraph, nx.Graph],
    M: int,
    perms: Sequence[Sequence[int]],
    girth_roots: Optional[Sequence[Hashable]] = None,
) -> Lift:
    """
    Build the M-lift defined by one permutation per base edge.

    Args:
        base: Factor graph (edges in row-major order) or plain graph (edges in
            networkx order, oriented as stored)
        M: Fold
        perms: One permutation of 0..M-1 per base edge

    Returns:
        Lift; for factor-graph bases it carries the lifted instance

    Raises:
        MalformedPermutationError: wrong count, or a sequence that is not a permutation
    """
    edges = _oriented_edges(base)
    checked = _check_perms(perms, len(edges), M)
    base_graph = base.graph if isinstance(base, FactorGraph) else base

    lifted = nx.Graph()
    for v in base_graph.nodes:
        for a in range(M):
            lifted.add_node((v, a))
    for (u, v), perm in zip(edges, checked):
        lifted.add_edges_from(((u, a), (v, perm[a])) for a in range(M))

    fg = base if isinstance(base, FactorGraph) else None
    instance = lift_instance(fg, M, checked) if fg is not None else None
    logger.debug(f"Built {M}-lift: {lifted.number_of_nodes()} vertices, {lifted.number_of_edges()} edges")
    return Lift(
        base=base_graph, fold=M, edges=edges, perms=checked, graph=lifted, factor_graph=fg,
        instance=instance, girth_roots=tuple(girth_roots) if girth_roots is not None else None,
    )


def identity_lift(base: Union[FactorGraph, nx.Graph]) -> Lift:
    edges = _oriented_edges(base)
    return build_lift(base, 1, [(0,)] * len(edges))


def is_covering_map(base: nx.Graph, lifted: nx.Graph, fold: int) -> bool:
    """
    Local-bijection test of the projection (v, a) -> v.

    True iff every fiber has `fold` vertices and, at every lifted vertex, the
    projection maps its neighbours bijectively onto the base neighbours.
    """
    fibers: dict[Hashable, int] = {}
    for node in lifted.nodes:
        v = node[0]
        if v not in base:
            return False
        fibers[v] = fibers.get(v, 0) + 1
    if any(fibers.get(v, 0) != fold for v in base.nodes):
        return False

    for node in lifted.nodes:
        projected = [nbr[0] for nbr in lifted.adj[node]]
        expected = set(base.adj[node[0]])
        if len(projected) != len(expected) or set(projected) != expected:
            return False
    return True


def validate_covering_map(lift: Lift) -> bool:
    return is_covering_map(lift.base, lift.graph, lift.fold)


def _require_instance(lift: Lift) -> ProblemInstance:
    if lift.instance is None or lift.factor_graph is None:
        raise InvalidAssignmentError("assignments need a lift of a factor graph")
    return lift.instance


def lift_assignment(lift: Lift, a: Sequence[int]) -> tuple[int, ...]:
    """
    Copy a valid base assignment onto every fiber.

    Raises:
        InvalidAssignmentError: a is not valid on the base instance
    """
    lifted_inst = _require_instance(lift)
    base_inst = lift.factor_graph.instance
    if len(a) != base_inst.n or not base_inst.is_feasible_point(a):
        raise InvalidAssignmentError(f"assignment {list(a)} is not valid on the base instance")

    M = lift.fold
    out = tuple(a[i] for i in range(base_inst.n) for _ in range(M))
    assert lifted_inst.is_feasible_point(out), "lifted assignment violates the lifted instance"
    return out


def average_assignment(lift: Lift, x: Sequence[int]) -> tuple[Fraction, ...]:
    """
    Per-fiber mean of a valid integral lift assignment.

    Raises:
        InvalidAssignmentError: x is not integral and valid on the lift
    """
    lifted_inst = _require_instance(lift)
    base_inst = lift.factor_graph.instance
    if len(x) != lifted_inst.n or any(Fraction(v).denominator != 1 for v in x):
        raise InvalidAssignmentError("lift assignment must be integral with one value per lifted variable")
    if not lifted_inst.is_feasible_point(x):
        raise InvalidAssignmentError("lift assignment violates the lifted instance")

    M = lift.fold
    avg = tuple(Fraction(sum(x[i * M:(i + 1) * M]), M) for i in range(base_inst.n))
    assert base_inst.is_feasible_point(avg), "average of a valid lift assignment left the base polytope"
    return avg
