"""
Covering to packing reduction by complementation.

With d = A.X - b, the map z -> X - z is a bijection between covering-feasible
points {A.z >= b, 0 <= z <= X} and packing-feasible points {A.x <= d,
0 <= x <= X}, and w.z = w.X - w.(X - z).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from instances.model import ProblemInstance, Scalar, Sense
from utils.errors import InfeasibleCoveringError, SenseError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComplementMap:
    """The mapping z = X - x between a covering instance and its packing complement."""

    X: tuple[int, ...]
    w: tuple[Fraction, ...]

    @property
    def offset(self) -> Fraction:
        """w.X, the constant of the objective relation."""
        return sum((wi * xi for wi, xi in zip(self.w, self.X)), Fraction(0))

    def to_covering(self, x: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Packing point x -> covering point X - x."""
        return tuple(Xi - xi for Xi, xi in zip(self.X, x))

    def to_packing(self, z: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Covering point z -> packing point X - z."""
        return tuple(Xi - zi for Xi, zi in zip(self.X, z))

    def covering_objective(self, packing_objective: Fraction) -> Fraction:
        """w.z from w.x where z = X - x."""
        return self.offset - packing_objective

    def describe(self) -> str:
        return f"z = X - x with X = {list(self.X)}; w.z = {self.offset} - w.x"


def complement_reduction(inst: ProblemInstance) -> tuple[ProblemInstance, ComplementMap]:
    """
    Reduce a covering instance to its packing complement.

    Args:
        inst: Covering instance

    Returns:
        (packing instance with the same A, w, X and constraint vector d = A.X - b,
         the complement mapping)

    Raises:
        SenseError: if inst is not a covering instance
        InfeasibleCoveringError: if some d_j < 0
    """
    if inst.sense != Sense.COVERING:
        raise SenseError("complement_reduction expects a covering instance")

    d = []
    for j, row in enumerate(inst.rows):
        dj = sum(inst.X[i] for i in row) - inst.b[j]
        if dj < 0:
            raise InfeasibleCoveringError(
                f"row {j} needs {inst.b[j]} but its box allows at most {dj + inst.b[j]}"
            )
        d.append(Fraction(dj))

    packing = ProblemInstance(
        n=inst.n, m=inst.m, rows=inst.rows, b=tuple(d), w=inst.w, X=inst.X, sense=Sense.PACKING,
    )
    mapping = ComplementMap(X=inst.X, w=inst.w)
    logger.debug(f"Complemented covering instance: d = {[str(x) for x in d]}, {mapping.describe()}")
    return packing, mapping
