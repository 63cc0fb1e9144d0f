"""
Girth amplification by bit-flip lifts.

The doubling lift of a graph with edges e_0..e_{k-1} has fold 2^k; copies are
k-bit strings and edge e_i joins copy a of its tail to copy a XOR 2^i of its
head. Any closed walk in the lift projects to a closed walk that uses every
edge an even number of times, so the lift's girth is at least twice the
base girth. XOR by a constant is an automorphism, so one BFS root per fiber
gives the exact girth.
"""

import logging
from typing import Hashable, Optional, Union

import networkx as nx

from config.settings import settings
from factor_graph.girth import girth
from factor_graph.graph import FactorGraph
from lifts.lift import Lift, build_lift, identity_lift
from utils.errors import MalformedPermutationError, ResourceLimitError


logger = logging.getLogger(__name__)


def _base_source(lift: Lift) -> Union[FactorGraph, nx.Graph]:
    return lift.factor_graph if lift.factor_graph is not None else lift.base


def girth_doubling_lift(g: Union[FactorGraph, nx.Graph], max_edges: Optional[int] = None) -> Lift:
    """
    The 2^|E|-fold bit-flip lift of g.

    Raises:
        ResourceLimitError: |E| exceeds max_edges (default settings.max_doubling_edges)
    """
    max_edges = settings.max_doubling_edges if max_edges is None else max_edges
    base_graph = g.graph if isinstance(g, FactorGraph) else g
    k = base_graph.number_of_edges()
    if k > max_edges:
        raise ResourceLimitError(f"doubling a graph with {k} edges needs fold 2^{k}; the edge cap is {max_edges}")

    M = 1 << k
    perms = [tuple(a ^ (1 << i) for a in range(M)) for i in range(k)]
    roots = tuple((v, 0) for v in base_graph.nodes)
    lift = build_lift(g, M, perms, girth_roots=roots)

    base_girth = girth(base_graph)
    lifted_girth = lift.girth()
    assert lifted_girth >= 2 * base_girth, f"doubling lift has girth {lifted_girth} < 2 * {base_girth}"
    logger.debug(f"Doubling lift: fold {M}, girth {base_girth} -> {lifted_girth}")
    return lift


def compose_lifts(inner: Lift, outer: Lift) -> Lift:
    """
    Flatten a lift of a lift into one lift of the original base.

    `outer` must be a lift of inner.graph. Vertex ((v, a), b) of the outer
    lift becomes (v, a + M1 * b), where M1 is the inner fold.

    Raises:
        MalformedPermutationError: outer is not a lift of inner.graph
    """
    M1, M2 = inner.fold, outer.fold
    outer_perm: dict[tuple[Hashable, Hashable], tuple[int, ...]] = {}
    for (x, y), perm in zip(outer.edges, outer.perms):
        outer_perm[(x, y)] = perm
        inverse = [0] * M2
        for b, c in enumerate(perm):
            inverse[c] = b
        outer_perm[(y, x)] = tuple(inverse)

    perms = []
    for (u, v), p in zip(inner.edges, inner.perms):
        composite = [0] * (M1 * M2)
        for a in range(M1):
            q = outer_perm.get(((u, a), (v, p[a])))
            if q is None:
                raise MalformedPermutationError(f"outer lift has no edge over (({u}, {a}), ({v}, {p[a]}))")
            for b in range(M2):
                composite[a + M1 * b] = p[a] + M1 * q[b]
        perms.append(tuple(composite))

    roots = None
    if outer.girth_roots is not None:
        roots = tuple((node[0][0], node[0][1] + M1 * node[1]) for node in outer.girth_roots)
    return build_lift(_base_source(inner), M1 * M2, perms, girth_roots=roots)


def amplify_girth(g: Union[FactorGraph, nx.Graph], target: int, max_fold: Optional[int] = None) -> Lift:
    """
    Repeat doubling lifts until the girth reaches target.

    Args:
        g: Base graph or factor graph
        target: Required girth
        max_fold: Largest fold allowed (default settings.max_lift_fold)

    Returns:
        Composite lift of g with girth >= target (g itself as a 1-lift when
        it already qualifies)

    Raises:
        ResourceLimitError: the next doubling would exceed the fold or edge caps;
            the message states the fold that would have been needed
    """
    max_fold = settings.max_lift_fold if max_fold is None else max_fold
    current = identity_lift(g)
    current_girth = current.girth()

    while current_girth < target:
        edges = current.graph.number_of_edges()
        if edges > settings.max_doubling_edges or current.fold << edges > max_fold:
            needed = f"{current.fold} * 2^{edges}"
            logger.warning(f"Girth {current_girth} < {target} and the next doubling needs fold {needed}")
            raise ResourceLimitError(
                f"reaching girth {target} needs fold at least {needed}, above the cap of {max_fold}"
            )
        doubling = girth_doubling_lift(current.graph, max_edges=edges)
        current = compose_lifts(current, doubling)
        current_girth = current.girth()
        logger.info(f"Amplified girth to {current_girth} with fold {current.fold}")

    return current
