"""
Optimal-face analysis of a solved LP: per-variable ranges, classification,
the uniqueness margin c and the iteration bound it implies.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from instances.model import ProblemInstance, Sense
from lp_exact.solver import LpResult, Vertex
from utils.errors import ParameterRangeError, UndefinedMarginError


logger = logging.getLogger(__name__)


class LpClass(str, Enum):
    UNIQUE_INTEGRAL = "unique-integral"
    UNIQUE_FRACTIONAL = "unique-fractional"
    MULTIPLE = "multiple"


@dataclass(frozen=True)
class VariableRange:
    """Coordinate-wise extrema over the optimal face."""

    x_min: tuple[Fraction, ...]
    x_max: tuple[Fraction, ...]

    @property
    def is_unique(self) -> bool:
        return self.x_min == self.x_max

    def has_fraction(self, r: int) -> bool:
        """True when [x_min_r, x_max_r] contains a non-integer (some optimum is fractional at r)."""
        return self.x_min[r].denominator != 1 or self.x_max[r].denominator != 1 or self.x_min[r] != self.x_max[r]


def variable_range(inst: ProblemInstance, lp: LpResult) -> VariableRange:
    """
    Min and max of every coordinate over the optimal vertices.

    The optimal face is the convex hull of the optimal vertices, so its
    coordinate extrema are attained at vertices.
    """
    columns = list(zip(*lp.opt_vertices))
    return VariableRange(
        x_min=tuple(min(col) for col in columns),
        x_max=tuple(max(col) for col in columns),
    )


def classify(inst: ProblemInstance, lp: LpResult) -> LpClass:
    rng = variable_range(inst, lp)
    if not rng.is_unique:
        return LpClass.MULTIPLE
    if all(v.denominator == 1 for v in lp.witness):
        return LpClass.UNIQUE_INTEGRAL
    return LpClass.UNIQUE_FRACTIONAL


def _gap(inst: ProblemInstance, optimum: Vertex, other: Vertex) -> Fraction:
    diff = [a - b for a, b in zip(optimum, other)]
    gain = sum((w * d for w, d in zip(inst.w, diff)), Fraction(0))
    if inst.sense == Sense.COVERING:
        gain = -gain
    return gain / sum(abs(d) for d in diff)


def compute_c(inst: ProblemInstance, lp: LpResult) -> Fraction:
    """
    Uniqueness margin c(P, w).

    Packing: min over vertices x != x* of w.(x* - x) / ||x* - x||_1.
    Covering: the same with w.(x - x*). For any point of the polytope the
    ratio is at least the smallest vertex ratio, so vertices suffice.

    Returns:
        0 when the optimum is not unique, otherwise the positive margin

    Raises:
        UndefinedMarginError: the polytope is the single point x*
    """
    if not lp.is_unique:
        return Fraction(0)
    others = [v for v in lp.vertices if v != lp.witness]
    if not others:
        raise UndefinedMarginError("the polytope is a single point, c is undefined")

    c = min(_gap(inst, lp.witness, v) for v in others)
    assert 0 <= c <= max(abs(w) for w in inst.w), f"margin {c} outside [0, max|w|]"
    logger.debug(f"Uniqueness margin c = {c}")
    return c


def convergence_threshold(inst: ProblemInstance, c: Fraction, w_max: Optional[Fraction] = None) -> int:
    """
    Smallest integer t with t > w_max / c + 1/2 (at least 1).

    Raises:
        ParameterRangeError: c <= 0
    """
    if c <= 0:
        raise ParameterRangeError(f"convergence threshold needs c > 0, got {c}")
    w_max = inst.max_weight() if w_max is None else w_max
    return max(1, math.floor(w_max / c + Fraction(1, 2)) + 1)
