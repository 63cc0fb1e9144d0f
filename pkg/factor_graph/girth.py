"""Shortest cycle length of an undirected simple graph."""

import math
from collections import deque
from typing import Hashable, Iterable, Optional, Union

import networkx as nx


def girth(g: nx.Graph, roots: Optional[Iterable[Hashable]] = None) -> Union[int, float]:
    """
    Length of the shortest cycle.

    Without roots this is networkx's girth; with roots a breadth-first
    search runs from those sources only.

    Args:
        g: Undirected simple graph
        roots: BFS sources; defaults to every vertex. A smaller set is exact
            when every cycle maps by an automorphism onto one through a root
            (e.g. one root per fiber of a fiber-transitive lift).

    Returns:
        Girth as an int, or math.inf for a forest
    """
    if roots is None:
        return nx.girth(g)

    best: Union[int, float] = math.inf
    for source in roots:
        dist = {source: 0}
        parent = {source: None}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            # every cycle closed from here has length >= 2 * dist[u]
            if 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
