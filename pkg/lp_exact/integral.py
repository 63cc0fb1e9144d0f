"""Brute-force integral optimum over ZBox(X), for cross-checks at desk scale."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from config.settings import settings
from instances.model import ProblemInstance
from utils.errors import LpInfeasibleError, ResourceLimitError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegralOptimum:
    value: Fraction
    solutions: tuple[tuple[int, ...], ...]


def best_integral(inst: ProblemInstance, limit: Optional[int] = None) -> IntegralOptimum:
    """
    Enumerate every integral point of the box and keep the optimal valid ones.

    Raises:
        ResourceLimitError: box larger than limit (default settings.exhaustive_box_limit)
        LpInfeasibleError: no integral point satisfies the rows
    """
    limit = settings.exhaustive_box_limit if limit is None else limit
    size = inst.box_size()
    if size > limit:
        raise ResourceLimitError(f"box has {size} points, enumeration limit is {limit}")

    best: Optional[Fraction] = None
    solutions: list[tuple[int, ...]] = []
    for point in inst.iter_box():
        if not inst.satisfies_rows(point):
            continue
        value = inst.objective_value(point)
        better = best is None or (value > best if inst.is_packing else value < best)
        if better:
            best, solutions = value, [point]
        elif value == best:
            solutions.append(point)

    if best is None:
        raise LpInfeasibleError("no integral point of the box satisfies the constraints")
    logger.debug(f"Integral optimum {best} attained by {len(solutions)} points")
    return IntegralOptimum(value=best, solutions=tuple(solutions))
