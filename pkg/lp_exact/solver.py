"""
Exact LP relaxation by basic-feasible-solution enumeration.

A basis picks k tight rows S and k free variables F; every other variable
sits at one of its bounds. A[S, F] is inverted once per (S, F) with exact
Gauss-Jordan elimination and reused for all 2^(n-k) bound choices. Solutions
satisfying every constraint are the vertices of the polytope.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from config.settings import settings
from instances.model import ProblemInstance, Sense
from utils.errors import LpInfeasibleError, ResourceLimitError


logger = logging.getLogger(__name__)

Vertex = tuple[Fraction, ...]
Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class LpResult:
    """Optimum and vertex list of a packing or covering LP."""

    sense: Sense
    opt_value: Fraction
    witness: Vertex
    vertices: tuple[Vertex, ...]
    opt_vertices: tuple[Vertex, ...]
    systems: int

    @property
    def is_unique(self) -> bool:
        return len(self.opt_vertices) == 1


def invert(matrix: Sequence[Sequence[Fraction]]) -> Optional[Matrix]:
    """Exact inverse by Gauss-Jordan elimination; None when singular."""
    k = len(matrix)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(c == r)) for c in range(k)]
        for r, row in enumerate(matrix)
    ]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def count_systems(n: int, m: int) -> int:
    """Number of (rows, free variables, bound choice) combinations enumerated."""
    return sum(math.comb(m, k) * math.comb(n, k) * 2 ** (n - k) for k in range(min(m, n) + 1))


def enumerate_vertices(inst: ProblemInstance, cap: Optional[int] = None) -> tuple[list[Vertex], int]:
    """
    All vertices of {A.x <= b (or >= b), 0 <= x <= X}, sorted lexicographically.

    Raises:
        ResourceLimitError: if the number of basis systems exceeds cap
    """
    cap = settings.lp_system_cap if cap is None else cap
    n, m = inst.n, inst.m
    systems = count_systems(n, m)
    if systems > cap:
        raise ResourceLimitError(f"LP with n={n}, m={m} needs {systems} basis systems, cap is {cap}")

    A = inst.to_matrix().tolist()
    found: set[Vertex] = set()
    for k in range(min(m, n) + 1):
        for S in itertools.combinations(range(m), k):
            for F in itertools.combinations(range(n), k):
                inverse = invert([[Fraction(A[j][i]) for i in F] for j in S])
                if inverse is None:
                    continue
                fixed = [i for i in range(n) if i not in F]
                for at_upper in itertools.product((False, True), repeat=len(fixed)):
                    x = [Fraction(0)] * n
                    for i, up in zip(fixed, at_upper):
                        x[i] = Fraction(inst.X[i]) if up else Fraction(0)
                    rhs = [inst.b[j] - sum((x[i] for i in fixed if A[j][i]), Fraction(0)) for j in S]
                    for row, i in zip(inverse, F):
                        x[i] = sum((c * r for c, r in zip(row, rhs)), Fraction(0))
                    vertex = tuple(x)
                    if vertex not in found and inst.is_feasible_point(vertex):
                        found.add(vertex)
    return sorted(found), systems


def solve_lp(inst: ProblemInstance, cap: Optional[int] = None) -> LpResult:
    """
    Solve the LP relaxation exactly.

    Args:
        inst: Packing or covering instance (exact b)
        cap: Basis-system cap (default settings.lp_system_cap)

    Returns:
        LpResult; opt is the maximum for packing and the minimum for covering,
        witness is the lexicographically first optimal vertex

    Raises:
        LpInfeasibleError: the polytope is empty
        ResourceLimitError: too many basis systems
    """
    vertices, systems = enumerate_vertices(inst, cap)
    if not vertices:
        logger.warning(f"LP relaxation of {inst.sense.value} instance is infeasible")
        raise LpInfeasibleError(f"the {inst.sense.value} LP has no feasible point")

    values = [inst.objective_value(v) for v in vertices]
    opt = max(values) if inst.is_packing else min(values)
    optimal = tuple(v for v, val in zip(vertices, values) if val == opt)

    logger.debug(f"LP solved: {len(vertices)} vertices from {systems} systems, opt={opt}")
    return LpResult(
        sense=inst.sense,
        opt_value=opt,
        witness=optimal[0],
        vertices=tuple(vertices),
        opt_vertices=optimal,
        systems=systems,
    )
