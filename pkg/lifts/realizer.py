"""
Search for an integral lift assignment whose fiber averages equal a rational point.

For each fold M (multiples of the denominator lcm up to M_max) every variable
fiber receives the balanced multiset of M integers with mean x_v. Each
constraint then needs its M copies to draw one fiber value per neighbour
with every copy's row satisfied; a wrap-around layout is tried first and a
budgeted backtracking search second. The matchings found become the edge
permutations of the lift.
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Optional, Sequence

from config.settings import settings
from factor_graph.graph import build_factor_graph
from instances.model import ProblemInstance
from instances.rational import lcm_of_denominators
from lifts.lift import Lift, average_assignment, build_lift
from utils.errors import InvalidAssignmentError


logger = logging.getLogger(__name__)

Columns = list[list[int]]


class _BudgetExhausted(Exception):
    pass


def balanced_values(x: Fraction, M: int) -> list[int]:
    """M integers with sum M*x, each floor(x) or floor(x)+1; larger values first."""
    total = x * M
    if total.denominator != 1:
        raise InvalidAssignmentError(f"{x} cannot be averaged over {M} copies")
    q, r = divmod(total.numerator, M)
    return [q + 1] * r + [q] * (M - r)


def _row_ok(total: int, budget: int, packing: bool) -> bool:
    return total <= budget if packing else total >= budget


def _wrap_around(fibers: Sequence[list[int]], M: int) -> Columns:
    """Lay each fiber's values along consecutive constraint copies, continuing where the last fiber ended."""
    columns: Columns = [[0] * len(fibers) for _ in range(M)]
    start = 0
    for pos, values in enumerate(fibers):
        for offset, value in enumerate(values):
            columns[(start + offset) % M][pos] = value
        start += sum(1 for v in values if v != values[-1])
    return columns


class _RowSearch:
    """Backtracking assignment of fiber values to constraint copies."""

    def __init__(self, fibers: Sequence[list[int]], M: int, budget: int, packing: bool, node_budget: int):
        self.remaining = [Counter(values) for values in fibers]
        self.M = M
        self.budget = budget
        self.packing = packing
        self.nodes_left = node_budget
        self.columns: Columns = []

    def _bound_ok(self, pos: int, partial: int) -> bool:
        rest = self.remaining[pos:]
        if self.packing:
            return partial + sum(min(c) for c in rest) <= self.budget
        return partial + sum(max(c) for c in rest) >= self.budget

    def _fill(self, column: list[int], pos: int, partial: int) -> bool:
        self.nodes_left -= 1
        if self.nodes_left < 0:
            raise _BudgetExhausted
        if pos == len(self.remaining):
            if not _row_ok(partial, self.budget, self.packing):
                return False
            self.columns.append(list(column))
            if len(self.columns) == self.M or self._fill([], 0, 0):
                return True
            self.columns.pop()
            return False
        if not self._bound_ok(pos, partial):
            return False
        counter = self.remaining[pos]
        for value in sorted(counter, reverse=not self.packing):
            counter[value] -= 1
            if counter[value] == 0:
                del counter[value]
            column.append(value)
            if self._fill(column, pos + 1, partial + value):
                return True
            column.pop()
            counter[value] += 1
        return False

    def run(self) -> Optional[Columns]:
        try:
            return self.columns if self._fill([], 0, 0) else None
        except _BudgetExhausted:
            return None


def _arrange_row(fibers: Sequence[list[int]], M: int, budget: int, packing: bool, node_budget: int) -> Optional[Columns]:
    if not fibers:
        return [[] for _ in range(M)] if _row_ok(0, budget, packing) else None
    columns = _wrap_around(fibers, M)
    if all(_row_ok(sum(col), budget, packing) for col in columns):
        return columns
    return _RowSearch(fibers, M, budget, packing, node_budget).run()


def _try_fold(inst: ProblemInstance, x: Sequence[Fraction], M: int, node_budget: int) -> Optional[tuple[Lift, tuple[int, ...]]]:
    values = [balanced_values(xi, M) for xi in x]
    fg = build_factor_graph(inst)

    # per variable, the copy indices holding each value
    slots = [{v: [a for a in range(M) if vals[a] == v] for v in set(vals)} for vals in values]
    perm_of_edge: dict[tuple[int, int], list[int]] = {}

    for j, row in enumerate(inst.rows):
        columns = _arrange_row([values[i] for i in row], M, inst.budget(j), inst.is_packing, node_budget)
        if columns is None:
            return None
        free = {i: {v: list(copies) for v, copies in slots[i].items()} for i in row}
        for k, column in enumerate(columns):
            for i, value in zip(row, column):
                a = free[i][value].pop()
                perm_of_edge.setdefault((i, j), [0] * M)[a] = k

    perms = [tuple(perm_of_edge[e]) for e in fg.edges]
    lift = build_lift(fg, M, perms)
    assignment = tuple(values[i][a] for i in range(inst.n) for a in range(M))
    return lift, assignment


def realize_fractional_solution(
    inst: ProblemInstance,
    x: Sequence[Fraction],
    M_max: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> Optional[tuple[Lift, tuple[int, ...]]]:
    """
    Find a lift and a valid integral assignment on it averaging to x.

    Args:
        inst: Base instance
        x: Feasible rational point of the LP relaxation
        M_max: Largest fold tried (default realizer_fold_multiplier * lcm of denominators)
        node_budget: Backtracking nodes per row and fold (default settings.realizer_node_budget)

    Returns:
        (lift, assignment) with average_assignment(lift, assignment) == x, or
        None when nothing was found within the budget

    Raises:
        InvalidAssignmentError: x is not a feasible point
    """
    x = tuple(Fraction(v) for v in x)
    if len(x) != inst.n or not inst.is_feasible_point(x):
        raise InvalidAssignmentError(f"point {[str(v) for v in x]} is not feasible for the instance")

    step = lcm_of_denominators(x)
    M_max = settings.realizer_fold_multiplier * step if M_max is None else M_max
    node_budget = settings.realizer_node_budget if node_budget is None else node_budget

    for M in range(step, M_max + 1, step):
        found = _try_fold(inst, x, M, node_budget)
        if found is None:
            logger.debug(f"No realization with fold {M}")
            continue
        lift, assignment = found
        assert average_assignment(lift, assignment) == x, "realized assignment does not average to x"
        logger.info(f"Realized fractional point with a {M}-lift")
        return found

    logger.info(f"No realization found up to fold {M_max}")
    return None
