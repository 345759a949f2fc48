"""Exact integer and rational helpers shared by the rest of the package.

Python integers are already arbitrary precision and :class:`fractions.Fraction`
keeps values in lowest terms with a positive denominator, so this module only
adds the conventions the rest of the code relies on: a total binomial
coefficient, a rational constructor with a stable error message, and the
``"num/den"`` text form used in every serialized report.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "binomial",
    "rational",
    "format_rational",
    "parse_rational",
    "geometric_factor",
]


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Return C(n, k), with 0 whenever ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational(num: int, den: int) -> Fraction:
    """Build a normalized fraction ``num/den``."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"n"`` or ``"num/den"`` (integers only, no decimals)."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        numerator = int(num)
        denominator = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    return rational(numerator, denominator)


def geometric_factor(p: Fraction, k: int) -> Fraction:
    """p * (1 + p + ... + p^(k-1)), i.e. p(1 - p^k)/(1 - p) without the pole at p = 1."""
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(k):
        total += power
        power *= p
    return p * total
