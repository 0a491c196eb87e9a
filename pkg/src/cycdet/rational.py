"""Exact rational scalars.

All arithmetic in this package runs on :class:`fractions.Fraction`: numerator
and denominator are arbitrary-precision integers, values are always reduced
with a positive denominator, and equality is decidable.  Floats are rejected
at every entry point because gap detection and every sign conclusion are
discontinuous in the entries; a binary-float approximation of "0.1" would
silently move gaps around.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction, or string ("p/q", "3", "-0.25") exactly.

    Decimal strings parse to exact decimal fractions: "0.1" becomes 1/10.
    Floats raise TypeError rather than smuggling in binary rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass an int, Fraction, or exact string like '1/10' or '0.1'"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational value")


def format_rational(value: Fraction) -> str:
    """Canonical text form: "p/q", or just "p" when the denominator is 1."""
    return str(value)


def sign(value: Fraction) -> int:
    """-1, 0, or +1."""
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0
