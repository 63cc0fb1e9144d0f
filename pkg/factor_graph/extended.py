"""
Extended values: exact rationals plus the two infinities.

math.inf compares correctly against every Fraction and absorbs additions of
finite values, so tables mix Fraction and +/-inf freely.
"""

import math
from fractions import Fraction
from typing import Iterable, Union

from instances.rational import format_rational


ExtendedValue = Union[Fraction, int, float]

NEG_INF = -math.inf
POS_INF = math.inf


def is_finite(value: ExtendedValue) -> bool:
    return not (isinstance(value, float) and math.isinf(value))


def ext_add(values: Iterable[ExtendedValue]) -> ExtendedValue:
    """Sum where -inf absorbs (and +inf absorbs in covering tables); starts from exact 0."""
    total: ExtendedValue = Fraction(0)
    for v in values:
        total = total + v
    return total


def format_extended(value: ExtendedValue) -> str:
    """Render as "p/q", "p", "-inf" or "inf"."""
    if not is_finite(value):
        return "-inf" if value < 0 else "inf"
    return format_rational(Fraction(value))
