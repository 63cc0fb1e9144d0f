"""
Path-prefix (computation) tree of a factor graph.

Nodes are the backtrack-free paths of length at most h starting at a root
variable vertex. Node 0 is the zero-length path; every other node extends
its parent's path by one vertex. Nodes are stored flat in breadth-first
order, so children always come after their parent.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from config.settings import settings
from factor_graph.graph import FactorGraph
from utils.errors import ParameterRangeError, ResourceLimitError


logger = logging.getLogger(__name__)

VARIABLE = "v"
CONSTRAINT = "C"


@dataclass
class TreeNode:
    """A path; `kind`/`vertex` name its last vertex t(p)."""

    index: int
    parent: Optional[int]
    depth: int
    kind: str
    vertex: int
    children: list[int] = field(default_factory=list)

    @property
    def is_variable(self) -> bool:
        return self.kind == VARIABLE


@dataclass
class PathPrefixTree:
    fg: FactorGraph
    root: int
    h: int
    nodes: list[TreeNode]

    def __len__(self) -> int:
        return len(self.nodes)

    def path(self, index: int) -> tuple[tuple[str, int], ...]:
        """The factor-graph path of a node, root first."""
        out = []
        node: Optional[TreeNode] = self.nodes[index]
        while node is not None:
            out.append((node.kind, node.vertex))
            node = self.nodes[node.parent] if node.parent is not None else None
        return tuple(reversed(out))

    def to_networkx(self) -> nx.DiGraph:
        """Directed parent -> child view, node attributes kind/vertex/depth."""
        g = nx.DiGraph()
        for node in self.nodes:
            g.add_node(node.index, kind=node.kind, vertex=node.vertex, depth=node.depth)
            if node.parent is not None:
                g.add_edge(node.parent, node.index)
        return g


def build_tree(fg: FactorGraph, r: int, h: int, cap: Optional[int] = None) -> PathPrefixTree:
    """
    Build the path-prefix tree of fg rooted at variable r, depth h.

    Args:
        fg: Factor graph
        r: Root variable index
        h: Maximum path length (2t for t min-sum iterations)
        cap: Node cap (default settings.tree_node_cap)

    Returns:
        PathPrefixTree with one node per backtrack-free path of length <= h

    Raises:
        ParameterRangeError: h < 0 or r out of range
        ResourceLimitError: more than cap nodes
    """
    if h < 0:
        raise ParameterRangeError(f"tree depth must be >= 0, got {h}")
    if not 0 <= r < fg.n:
        raise ParameterRangeError(f"root {r} is not a variable of the instance")
    cap = settings.tree_node_cap if cap is None else cap

    nodes = [TreeNode(index=0, parent=None, depth=0, kind=VARIABLE, vertex=r)]
    frontier = 0
    while frontier < len(nodes):
        node = nodes[frontier]
        frontier += 1
        if node.depth == h:
            continue
        back = nodes[node.parent].vertex if node.parent is not None else None
        if node.is_variable:
            kind, neighbours = CONSTRAINT, fg.var_neighbors[node.vertex]
        else:
            kind, neighbours = VARIABLE, fg.rows[node.vertex]
        for u in neighbours:
            if u == back:
                continue
            if len(nodes) >= cap:
                raise ResourceLimitError(
                    f"path-prefix tree rooted at v{r} with h={h} exceeds {cap} nodes"
                )
            child = TreeNode(index=len(nodes), parent=node.index, depth=node.depth + 1, kind=kind, vertex=u)
            node.children.append(child.index)
            nodes.append(child)

    logger.debug(f"Built path-prefix tree at v{r}, h={h}: {len(nodes)} nodes")
    return PathPrefixTree(fg=fg, root=r, h=h, nodes=nodes)
