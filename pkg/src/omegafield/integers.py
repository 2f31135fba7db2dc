"""Infinite integers and the lattice they count.

The lattice consists of points ``t + k*o`` (standard rational t, integer
multiplier k).  Counting the o-stepped points inside an interval yields
polynomials in the infinite unit S: degree-one counts ``t*S + k`` for the
non-negative lattice, and their inductive closure under addition and
multiplication, which is exactly the set of polynomials with an integer
constant term and a positive leading coefficient.  These behave like
natural numbers defined to within one unit: each has a distinct
successor, yet every one of them with an infinite part exceeds every
standard integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    IndistinguishableError,
    MathDomainError,
    PrecisionExhaustedError,
)
from .rationals import as_rational, format_rational, format_rational_json
from .series import ComparisonResult, OmegaNumber

__all__ = [
    "R1Point",
    "R1Interval",
    "AlephNumber",
    "ALEPH_ZERO",
    "ALEPH_ONE",
    "SIGMA",
    "count_interval",
    "phi",
    "psi",
    "successor",
    "predecessor",
    "oplus",
    "otimes",
    "oplus_inductive",
    "otimes_inductive",
    "compare_aleph",
    "embed",
    "integer_truncation",
    "archimedean_witness",
]


@dataclass(frozen=True)
class R1Point:
    """Lattice point t + k*o."""

    t: Fraction
    k: int

    def __post_init__(self):
        object.__setattr__(self, "t", as_rational(self.t))
        if not isinstance(self.k, int):
            raise TypeError("the o-multiplier must be an integer")

    @property
    def is_nonnegative(self) -> bool:
        """Membership in the non-negative lattice (t > 0, or t = 0 and k >= 0)."""
        return self.t > 0 or (self.t == 0 and self.k >= 0)

    def value(self) -> OmegaNumber:
        """The point as a series value."""
        return OmegaNumber([(0, self.t), (-1, Fraction(self.k))])

    def shifted(self, steps: int = 1) -> "R1Point":
        """The lattice point ``steps`` o-steps away."""
        return R1Point(self.t, self.k + steps)

    def __add__(self, other: "R1Point") -> "R1Point":
        return R1Point(self.t + other.t, self.k + other.k)

    def __sub__(self, other: "R1Point") -> "R1Point":
        return R1Point(self.t - other.t, self.k - other.k)

    def _key(self):
        return (self.t, self.k)

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __str__(self):
        return str(self.value())


@dataclass(frozen=True)
class R1Interval:
    """Interval of lattice points between two endpoints.

    ``closed`` includes both endpoints; otherwise the upper endpoint is
    excluded.  The count of contained points depends only on the
    difference of the endpoints.
    """

    lo: R1Point
    hi: R1Point
    closed: bool = True

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise MathDomainError("interval endpoints out of order")

    @property
    def is_empty(self) -> bool:
        return not self.closed and self.lo == self.hi


class AlephNumber:
    """Polynomial in the infinite unit S that denotes an infinite integer.

    Admissible coefficient lists (constant first) have either a single
    natural entry, or degree >= 1 with an integer constant term and a
    positive leading coefficient.  Interior coefficients may be any
    rationals; they arise from counts such as t*S + k with fractional t.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence = (0,)):
        values = [as_rational(c) for c in coeffs] or [Fraction(0)]
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        if len(values) == 1:
            if values[0].denominator != 1 or values[0] < 0:
                raise MathDomainError(
                    f"{values[0]} is not a natural number"
                )
        else:
            if values[0].denominator != 1:
                raise MathDomainError(
                    f"constant term {values[0]} must be an integer"
                )
            if values[-1] <= 0:
                raise MathDomainError(
                    f"leading coefficient {values[-1]} must be positive"
                )
        self._coeffs = tuple(values)

    @classmethod
    def from_int(cls, n: int) -> "AlephNumber":
        return cls((n,))

    @property
    def coeffs(self) -> tuple:
        """Coefficients, constant term first."""
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_standard(self) -> bool:
        return self.degree == 0

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = AlephNumber.from_int(other) if other >= 0 else None
            if other is None:
                return False
        if not isinstance(other, AlephNumber):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        return str(embed(self))

    def __repr__(self):
        return f"AlephNumber({self})"

    def to_json(self) -> dict:
        return {
            "kind": "aleph",
            "coeffs": [format_rational_json(c) for c in self._coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "AlephNumber":
        if data.get("kind") != "aleph":
            raise ValueError("not a serialized infinite integer")
        return cls([Fraction(c) for c in data["coeffs"]])


ALEPH_ZERO = AlephNumber((0,))
ALEPH_ONE = AlephNumber((1,))
#: The count of o-stepped points from o up to 1: the infinite unit itself.
SIGMA = AlephNumber((0, 1))


def phi(point: R1Point) -> AlephNumber:
    """Count-based image of a non-negative lattice point: t*S + k.

    Counting the o-stepped progression from o up to t + k*o gives t*S + k
    points, the closed form validated by finite surrogates (replace S by
    a concrete integer M and o by 1/M).
    """
    if not point.is_nonnegative:
        raise MathDomainError(f"{point} is not in the non-negative lattice")
    if point.t == 0:
        return AlephNumber((point.k,))
    return AlephNumber((Fraction(point.k), point.t))


def psi(number: AlephNumber) -> R1Point:
    """Inverse of phi on counts of degree at most one."""
    if number.degree > 1:
        raise MathDomainError(
            "only degree <= 1 integers correspond to lattice points"
        )
    constant = number.coefficient(0)
    return R1Point(number.coefficient(1), int(constant))


def count_interval(interval: R1Interval) -> AlephNumber:
    """Number of lattice points inside the interval.

    A closed interval [a, b] holds phi(b - a) + 1 points; dropping the
    upper endpoint drops the final point.  Depends only on b - a.
    """
    if interval.is_empty:
        raise MathDomainError("empty interval has no well-defined count")
    span = phi(interval.hi - interval.lo)
    return oplus(span, ALEPH_ONE) if interval.closed else span


def successor(number: AlephNumber) -> AlephNumber:
    """The next integer: constant term raised by one."""
    return AlephNumber((number.coefficient(0) + 1,) + number.coeffs[1:])


def predecessor(number: AlephNumber) -> AlephNumber:
    """The previous integer; zero has none."""
    if number == ALEPH_ZERO:
        raise MathDomainError("zero has no predecessor")
    return AlephNumber((number.coefficient(0) - 1,) + number.coeffs[1:])


def oplus(left: AlephNumber, right: AlephNumber) -> AlephNumber:
    """Closed-form sum: coefficientwise polynomial addition."""
    size = max(len(left.coeffs), len(right.coeffs))
    return AlephNumber(
        [left.coefficient(i) + right.coefficient(i) for i in range(size)]
    )


def otimes(left: AlephNumber, right: AlephNumber) -> AlephNumber:
    """Closed-form product: polynomial multiplication."""
    if left == ALEPH_ZERO or right == ALEPH_ZERO:
        return ALEPH_ZERO
    out = [Fraction(0)] * (left.degree + right.degree + 1)
    for i, a in enumerate(left.coeffs):
        for j, b in enumerate(right.coeffs):
            out[i + j] += a * b
    return AlephNumber(out)


def oplus_inductive(number: AlephNumber, steps: int) -> AlephNumber:
    """Sum with a standard natural, by repeated successor."""
    if steps < 0:
        raise ValueError("steps must be a natural number")
    acc = number
    for _ in range(steps):
        acc = successor(acc)
    return acc


def otimes_inductive(number: AlephNumber, factor: int) -> AlephNumber:
    """Product with a standard natural, by repeated addition.

    Unfolds the recursion L*(m+1) = L*m + L; the accumulated addition is
    the transferred sum, since adding a full infinite integer cannot be
    reached by finitely many successor steps.
    """
    if factor < 0:
        raise ValueError("factor must be a natural number")
    acc = ALEPH_ZERO
    for _ in range(factor):
        acc = oplus(acc, number)
    return acc


def compare_aleph(left: AlephNumber, right: AlephNumber) -> ComparisonResult:
    """Lexicographic comparison from the top degree downward."""
    size = max(len(left.coeffs), len(right.coeffs))
    for i in range(size - 1, -1, -1):
        a, b = left.coefficient(i), right.coefficient(i)
        if a != b:
            return ComparisonResult.GT if a > b else ComparisonResult.LT
    return ComparisonResult.EQ


def embed(number: AlephNumber) -> OmegaNumber:
    """The integer as an exact series value; a ring homomorphism."""
    return OmegaNumber(
        [(i, c) for i, c in enumerate(number.coeffs) if c != 0]
    )


def integer_truncation(value: OmegaNumber) -> AlephNumber:
    """The integer L with embed(L) <= value < embed(L) + 1.

    Keeps the positive-degree coefficients, floors the constant term and
    drops the infinitesimal tail; when the dropped tail is negative and
    the constant was already an integer the candidate overshoots by one
    and is decremented.  Requires value >= 0 with its sign and
    non-negative-exponent coefficients known.
    """
    try:
        sign = value.sign()
    except IndistinguishableError as exc:
        raise PrecisionExhaustedError(
            "sign of the value is not known at this precision"
        ) from exc
    if sign < 0:
        raise MathDomainError("integer truncation requires a non-negative value")
    if value.floor is not None and value.floor > 0:
        raise PrecisionExhaustedError(
            "constant coefficient of the value is unknown"
        )
    constant = value.coefficient(0)
    upper = [
        (e, value.coefficient(e))
        for e in value.support
        if e > 0
    ]
    coeffs = [Fraction(0)] * (1 + max((e for e, _ in upper), default=0))
    for e, c in upper:
        coeffs[e] = c
    coeffs[0] = Fraction(constant.numerator // constant.denominator)
    candidate = AlephNumber(coeffs)
    try:
        relation = value.compare(embed(candidate))
    except IndistinguishableError as exc:
        raise PrecisionExhaustedError(
            "fractional remainder is not resolvable at this precision"
        ) from exc
    if relation is ComparisonResult.LT:
        candidate = predecessor(candidate)
    return candidate


def archimedean_witness(a: OmegaNumber, b: OmegaNumber) -> AlephNumber:
    """An integer L with (L + 1) * a strictly above |b|, for a > 0.

    Obtained as the integer truncation of |b| / a: some multiple of the
    denominator always overtakes the numerator, whatever their orders of
    magnitude.
    """
    if a.sign() <= 0:
        raise MathDomainError("witness requires a positive denominator")
    if b.is_zero:
        return ALEPH_ZERO
    quotient = abs(b) * a.invert()
    return integer_truncation(quotient)
