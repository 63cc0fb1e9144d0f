"""
Exact rational scalars.

All real scalars of an instance (weights, constraint vector, LP values) are
fractions.Fraction. Text form is "p/q" in lowest terms, or "p" when q = 1.
Floating point input is refused: there is no floating-point mode.
"""

import math
from fractions import Fraction
from typing import Annotated, Any, Iterable, Union

from pydantic import BeforeValidator, PlainSerializer


RationalLike = Union[int, str, Fraction]


def parse_rational(value: Any) -> Fraction:
    """
    Convert an int, "p", "p/q" or Fraction into a canonical Fraction.

    Args:
        value: Input scalar

    Returns:
        Fraction in lowest terms with positive denominator

    Raises:
        ValueError: for floats, bools, malformed text or zero denominators
    """
    if isinstance(value, bool):
        raise ValueError(f"boolean is not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        numerator, sep, denominator = text.partition("/")
        try:
            p = int(numerator)
            q = int(denominator) if sep else 1
        except ValueError:
            raise ValueError(f"malformed rational {value!r}, expected 'p' or 'p/q'") from None
        if q == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(p, q)
    raise ValueError(f"unsupported rational value {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as 'p/q', or 'p' when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integral(value: Fraction) -> bool:
    """True when the rational is an integer."""
    return Fraction(value).denominator == 1


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators (1 for an empty input)."""
    result = 1
    for v in values:
        result = math.lcm(result, Fraction(v).denominator)
    return result


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
