"""
Bottom-up optimisation on a path-prefix tree.

Each variable-path p gets a table val[p][beta] = w * beta + sum over its
constraint children q of val[q][beta]. Each constraint-path q gets a table
indexed by its parent's value: the best sum of its children's tables over
child assignments that keep the tree factor of q satisfied. Packing trees
maximise with sum <= budget; covering trees minimise with sum >= budget.

Constraint nodes enumerate child assignments exhaustively when the space is
small and use an exact-sum dynamic programme otherwise.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

from config.settings import settings
from factor_graph.extended import NEG_INF, POS_INF, ExtendedValue
from instances.model import Sense
from tree_dp.tree import PathPrefixTree, TreeNode
from utils.errors import InfeasibleRootError, ParameterRangeError


logger = logging.getLogger(__name__)

Table = tuple[ExtendedValue, ...]


class _Objective:
    """Sense-dependent comparison and feasibility."""

    def __init__(self, sense: Sense):
        self.packing = sense == Sense.PACKING
        self.worst = NEG_INF if self.packing else POS_INF
        self.pick = max if self.packing else min

    def allowed(self, total: int, budget: int) -> bool:
        return total <= budget if self.packing else total >= budget


def _enumerate_children(
    parent_bound: int, budget: int, child_tables: Sequence[Table], objective: _Objective
) -> Table:
    out = []
    for beta in range(parent_bound + 1):
        best = objective.worst
        for values in itertools.product(*(range(len(t)) for t in child_tables)):
            if not objective.allowed(beta + sum(values), budget):
                continue
            total: ExtendedValue = Fraction(0)
            for table, z in zip(child_tables, values):
                total = total + table[z]
            best = objective.pick(best, total)
        out.append(best)
    return tuple(out)


def _dp_children(
    parent_bound: int, budget: int, child_tables: Sequence[Table], objective: _Objective
) -> Table:
    total_bound = sum(len(t) - 1 for t in child_tables)
    exact: list[ExtendedValue] = [Fraction(0)] + [objective.worst] * total_bound
    for table in child_tables:
        merged = [objective.worst] * (total_bound + 1)
        for s, base in enumerate(exact):
            if base == objective.worst:
                continue
            for z, value in enumerate(table):
                merged[s + z] = objective.pick(merged[s + z], base + value)
        exact = merged
    out = []
    for beta in range(parent_bound + 1):
        candidates = [v for s, v in enumerate(exact) if objective.allowed(beta + s, budget)]
        out.append(objective.pick(candidates) if candidates else objective.worst)
    return tuple(out)


def _constraint_table(
    tree: PathPrefixTree, node: TreeNode, tables: dict[int, Table], objective: _Objective, limit: int
) -> Table:
    fg = tree.fg
    parent = tree.nodes[node.parent]
    child_tables = [tables[c] for c in node.children]
    budget = fg.budgets[node.vertex]
    parent_bound = fg.X[parent.vertex]

    space = math.prod(len(t) for t in child_tables)
    if space <= limit:
        return _enumerate_children(parent_bound, budget, child_tables, objective)
    return _dp_children(parent_bound, budget, child_tables, objective)


def tree_optima(tree: PathPrefixTree, limit: Optional[int] = None) -> Table:
    """
    Optimum of the tree problem for every root value.

    Args:
        tree: Path-prefix tree
        limit: Child-assignment count up to which constraint nodes enumerate
            (default settings.tree_enumeration_limit)

    Returns:
        Tuple indexed by beta in {0, ..., X_r}; -inf (+inf for covering)
        where the root value has no valid completion
    """
    limit = settings.tree_enumeration_limit if limit is None else limit
    fg = tree.fg
    objective = _Objective(fg.sense)

    tables: dict[int, Table] = {}
    for node in reversed(tree.nodes):
        if node.is_variable:
            i = node.vertex
            table = []
            for beta in range(fg.X[i] + 1):
                value: ExtendedValue = fg.phi(i, beta)
                for c in node.children:
                    value = value + tables[c][beta]
                table.append(value)
            tables[node.index] = tuple(table)
        else:
            tables[node.index] = _constraint_table(tree, node, tables, objective, limit)
        for c in node.children:
            del tables[c]
    return tables[0]


def tree_optimum(tree: PathPrefixTree, beta: int) -> ExtendedValue:
    """Optimum over valid tree assignments whose root value is beta."""
    bound = tree.fg.X[tree.root]
    if not 0 <= beta <= bound:
        raise ParameterRangeError(f"root value {beta} outside [0, {bound}]")
    return tree_optima(tree)[beta]


def opt_dp_root_set(tree: PathPrefixTree, t: Optional[int] = None) -> frozenset[int]:
    """
    Root values of the optimal tree assignments.

    Args:
        tree: Path-prefix tree (built with h = 2t)
        t: Optional iteration count, checked against tree.h

    Raises:
        ParameterRangeError: t given and tree.h != 2t
        InfeasibleRootError: no root value has a valid completion
    """
    if t is not None and tree.h != 2 * t:
        raise ParameterRangeError(f"tree has depth {tree.h}, expected {2 * t} for t={t}")
    optima = tree_optima(tree)
    objective = _Objective(tree.fg.sense)
    best = objective.pick(optima)
    if best == objective.worst:
        raise InfeasibleRootError(f"no valid assignment of the tree rooted at v{tree.root}")
    return frozenset(beta for beta, value in enumerate(optima) if value == best)
