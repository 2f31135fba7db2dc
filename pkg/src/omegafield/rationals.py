"""Exact rational scalars.

Coefficients throughout the library are arbitrary-precision rationals in
canonical form (positive denominator, gcd one).  The standard library
``fractions.Fraction`` already guarantees both invariants, so it is used
directly; this module adds coercion, formatting and exact root extraction
on top of it.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    IrrationalLeadingCoefficientError,
    NegativeBaseError,
)

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or "num/den" string to an exact rational.

    Floats are rejected: they would silently smuggle binary rounding into
    arithmetic that is exact by contract.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """Render ``num/den`` with a ``/1`` denominator suppressed."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_rational_json(q: Fraction) -> str:
    """Render ``num/den`` always carrying the denominator, for JSON."""
    return f"{q.numerator}/{q.denominator}"


def _int_nth_root(n: int, k: int):
    """Exact k-th root of a non-negative integer, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1) or k == 1:
        return n
    # Newton iteration on integers, seeded from the bit length.
    x = 1 << (n.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_pow(base: Fraction, exponent: Fraction) -> Fraction:
    """Exact ``base ** exponent`` for rational exponents.

    Raises NegativeBaseError for a non-integer power of a negative base
    and IrrationalLeadingCoefficientError when no exact rational root
    exists.
    """
    base = as_rational(base)
    exponent = as_rational(exponent)
    if exponent.denominator == 1:
        return base ** int(exponent)
    if base < 0:
        raise NegativeBaseError(
            f"non-integer power {exponent} of negative base {base}"
        )
    if base == 0:
        if exponent > 0:
            return Fraction(0)
        raise DivisionByZeroError("zero base with negative exponent")
    q = exponent.denominator
    root_num = _int_nth_root(base.numerator, q)
    root_den = _int_nth_root(base.denominator, q)
    if root_num is None or root_den is None:
        raise IrrationalLeadingCoefficientError(
            f"{base} has no exact rational {q}-th root"
        )
    return Fraction(root_num, root_den) ** exponent.numerator
