"""Analytic lifting of smooth functions and the two differential calculi.

A smooth real function enters the library as a derivative oracle
``(k, t) -> f^(k)(t)``.  Its lift evaluates the Taylor expansion around
the standard part on the infinitesimal tail of the argument, which is a
finite exact computation once truncated at a working depth.

Two systems of higher differentials live on lifted functions: the
iterated o-step difference (order p) and the Leibniz differential
``f^(n) * o**n`` (order n).  They are linear combinations of each other
with exact rational coefficients; both conversion tables are produced
here and are exact inverses of one another.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional, Sequence

from .coefficients import k_coeff, x_coeff
from .errors import MathDomainError
from .rationals import (
    as_rational,
    format_rational_json,
    rational_pow,
)
from .series import DEFAULT_DEPTH, OmegaNumber, ZERO, o as O_UNIT

__all__ = [
    "LiftedFunction",
    "CoeffTable",
    "lift_eval",
    "derivative",
    "difference",
    "difference_iterated",
    "differential",
    "d_to_D_table",
    "D_to_d_table",
    "ns_diff_check",
    "polynomial_fn",
    "rational_fn",
    "power_fn",
    "exp_fn",
    "log_fn",
    "sin_fn",
    "cos_fn",
]

DEFAULT_DECIMAL_DIGITS = 50


@dataclass(frozen=True)
class LiftedFunction:
    """Smooth function presented by its derivative oracle.

    ``oracle(k, t)`` returns the exact rational used for the k-th
    derivative at the standard point t.  In decimal mode that rational is
    the fixed-precision decimal approximation of a transcendental value,
    converted exactly; everything downstream stays exact arithmetic on
    it.  ``degree`` marks oracles that vanish beyond a finite order, so
    polynomial lifts terminate and come back exact.
    """

    oracle: Callable[[int, Fraction], Fraction]
    domain: Callable[[Fraction], bool] = field(default=lambda t: True)
    mode: str = "exact"
    digits: int = DEFAULT_DECIMAL_DIGITS
    degree: Optional[int] = None
    label: str = "f"

    def derivative_at(self, k: int, t: Fraction) -> Fraction:
        if self.degree is not None and k > self.degree:
            return Fraction(0)
        return self.oracle(k, t)

    def in_domain(self, t: Fraction) -> bool:
        return self.domain(t)


def derivative(f: LiftedFunction, q: int = 1) -> LiftedFunction:
    """The q-th derivative: the oracle shifted by q."""
    if q < 0:
        raise ValueError("derivative order must be non-negative")
    if q == 0:
        return f
    base = f.oracle
    shifted_degree = max(f.degree - q, 0) if f.degree is not None else None
    return replace(
        f,
        oracle=lambda k, t: base(k + q, t),
        degree=shifted_degree,
        label=f"{f.label}^({q})",
    )


def lift_eval(f: LiftedFunction, x: OmegaNumber, depth: "int | None" = None) -> OmegaNumber:
    """Taylor evaluation of the lift at x = t + u, u infinitesimal.

    Sums f^(k)(t) * u**k / k! for k up to ``depth``; exact when the
    oracle terminates within the depth and the tail of x is exact,
    truncated at floor -depth otherwise.
    """
    depth = DEFAULT_DEPTH if depth is None else depth
    x = OmegaNumber._coerce(x)
    x._guard_series_in_o()
    t = x.standard_part()
    if not f.in_domain(t):
        raise MathDomainError(f"{t} is outside the domain of {f.label}")
    u = x.infinitesimal_part()
    terminating = f.degree is not None and f.degree <= depth
    top_order = min(depth, f.degree) if f.degree is not None else depth
    working_floor = None if (terminating and u.is_exact) else -depth
    total = OmegaNumber.single(0, f.derivative_at(0, t))
    u_power = OmegaNumber.single(0, 1)
    for k in range(1, top_order + 1):
        u_power = (u_power * u)._refloor(working_floor)
        if u_power.is_zero:
            break
        coeff = Fraction(f.derivative_at(k, t), factorial(k))
        if coeff != 0:
            total = total + u_power * OmegaNumber.single(0, coeff)
    return total._refloor(working_floor)


def difference(
    f: LiftedFunction, x: OmegaNumber, p: int, depth: "int | None" = None
) -> OmegaNumber:
    """Iterated o-step difference of order p, in closed form.

    The alternating sum over k of (-1)**(p-k) * C(p,k) * lift(x + k*o).
    Shifting by k*o moves only the infinitesimal tail, so every term is
    expanded around the same standard point.  The result has order >= p
    in o: degree-(p-1) polynomials are annihilated.
    """
    if p < 0:
        raise ValueError("difference order must be non-negative")
    total = ZERO
    for k in range(p + 1):
        term = lift_eval(f, x + OmegaNumber.single(-1, k), depth)
        weight = (-1) ** (p - k) * comb(p, k)
        total = total + term * OmegaNumber.single(0, weight)
    return total


def difference_iterated(
    f: LiftedFunction, x: OmegaNumber, p: int, depth: "int | None" = None
) -> OmegaNumber:
    """Order-p difference by literal recursion D g = g(x + o) - g(x)."""
    if p < 0:
        raise ValueError("difference order must be non-negative")

    def step(point: OmegaNumber, order: int) -> OmegaNumber:
        if order == 0:
            return lift_eval(f, point, depth)
        return step(point + O_UNIT, order - 1) - step(point, order - 1)

    return step(OmegaNumber._coerce(x), p)


def differential(
    f: LiftedFunction, x: OmegaNumber, n: int, depth: "int | None" = None
) -> OmegaNumber:
    """Leibniz differential of order n: f^(n) lifted at x, times o**n."""
    if n < 0:
        raise ValueError("differential order must be non-negative")
    value = lift_eval(derivative(f, n), x, depth)
    return value * OmegaNumber.single(-n, 1)


def ns_diff_check(
    f: LiftedFunction, t, h: OmegaNumber, depth: "int | None" = None
) -> bool:
    """Order-topology differentiability witness at a standard point.

    The first-order remainder lift(t+h) - lift(t) - lift(f')(t) * h must
    vanish to order at least 2 * ord(h); a remainder that is zero down to
    the working depth counts as passing.
    """
    depth = DEFAULT_DEPTH if depth is None else depth
    h = OmegaNumber._coerce(h)
    if not (h.is_exact and not h.is_zero and h.is_infinitesimal):
        raise MathDomainError("step must be a nonzero exact infinitesimal")
    base = OmegaNumber.from_rational(as_rational(t))
    remainder = (
        lift_eval(f, base + h, depth)
        - lift_eval(f, base, depth)
        - lift_eval(derivative(f), base, depth) * h
    )
    if remainder.is_zero:
        return True
    if remainder.is_truncated_zero:
        observed = depth + 1
    else:
        observed = -remainder.top
    return observed >= 2 * h.ord_o()


# ----------------------------------------------------------------------
# conversion tables between the two differential families


@dataclass(frozen=True)
class CoeffTable:
    """Triangular table converting one differential family to the other.

    Row i (1-based order i+1... row index 0 is order 1) lists the exact
    coefficients from the diagonal column up to the cutoff order.
    """

    direction: str  # "d_to_D" or "D_to_d"
    cutoff: int
    rows: tuple

    def entry(self, row_order: int, col_order: int) -> Fraction:
        """Coefficient at (row_order, col_order); zero below the diagonal."""
        if not 1 <= row_order <= self.cutoff:
            raise IndexError(f"row order {row_order} outside 1..{self.cutoff}")
        if not 1 <= col_order <= self.cutoff:
            raise IndexError(f"column order {col_order} outside 1..{self.cutoff}")
        if col_order < row_order:
            return Fraction(0)
        return self.rows[row_order - 1][col_order - row_order]

    def row(self, row_order: int) -> tuple:
        return self.rows[row_order - 1]

    def to_json(self) -> dict:
        return {
            "kind": "coeff_table",
            "direction": self.direction,
            "cutoff": self.cutoff,
            "rows": [
                [format_rational_json(c) for c in row] for row in self.rows
            ],
        }

    @classmethod
    def from_json(cls, data) -> "CoeffTable":
        if data.get("kind") != "coeff_table":
            raise ValueError("not a serialized coefficient table")
        return cls(
            direction=data["direction"],
            cutoff=int(data["cutoff"]),
            rows=tuple(
                tuple(Fraction(c) for c in row) for row in data["rows"]
            ),
        )


def d_to_D_table(max_order: int) -> CoeffTable:
    """Difference operators in terms of Leibniz differentials.

    Row p holds the weights of the order-n differentials (n from p to the
    cutoff) in the order-p difference: the alternating sums divided by n!.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    rows = tuple(
        tuple(
            Fraction(x_coeff(p, n), factorial(n)) for n in range(p, max_order + 1)
        )
        for p in range(1, max_order + 1)
    )
    return CoeffTable("d_to_D", max_order, rows)


def D_to_d_table(max_order: int) -> CoeffTable:
    """Leibniz differentials in terms of difference operators.

    Row n holds the weights of the order-p differences (p from n to the
    cutoff) in the order-n differential: n! (-1)**(p-n) K(p-1, p-n) / p!,
    with a unit diagonal (the empty product).
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    rows = tuple(
        tuple(
            Fraction(
                factorial(n) * (-1) ** (p - n) * k_coeff(p - 1, p - n),
                factorial(p),
            )
            for p in range(n, max_order + 1)
        )
        for n in range(1, max_order + 1)
    )
    return CoeffTable("D_to_d", max_order, rows)


# ----------------------------------------------------------------------
# built-in function constructors


def polynomial_fn(coeffs: Sequence) -> LiftedFunction:
    """Exact polynomial with the given ascending coefficients."""
    values = [as_rational(c) for c in coeffs] or [Fraction(0)]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    deg = len(values) - 1

    def oracle(k: int, t: Fraction) -> Fraction:
        total = Fraction(0)
        for i in range(k, deg + 1):
            stepdown = values[i] * Fraction(
                factorial(i), factorial(i - k)
            )
            total += stepdown * t ** (i - k)
        return total

    label = "poly(" + ",".join(str(v) for v in values) + ")"
    return LiftedFunction(oracle=oracle, degree=deg, label=label)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_derive(a):
    return [i * c for i, c in enumerate(a)][1:] or [Fraction(0)]


def _poly_eval(a, t):
    total = Fraction(0)
    for c in reversed(a):
        total = total * t + c
    return total


def rational_fn(num: Sequence, den: Sequence) -> LiftedFunction:
    """Quotient of polynomials, exact away from the denominator's zeros.

    The k-th derivative is maintained as N_k / Q**(k+1) via the quotient
    rule N_{k+1} = N_k' Q - (k+1) N_k Q'; numerators are cached.
    """
    p = [as_rational(c) for c in num] or [Fraction(0)]
    q = [as_rational(c) for c in den] or [Fraction(0)]
    if not any(q):
        raise MathDomainError("zero denominator polynomial")
    q_prime = _poly_derive(q)
    numerators = [p]

    def numerator(k: int):
        while len(numerators) <= k:
            index = len(numerators) - 1
            n_k = numerators[index]
            nxt = [
                a - b
                for a, b in _pad(
                    _poly_mul(_poly_derive(n_k), q),
                    _poly_mul([(index + 1) * c for c in n_k], q_prime),
                )
            ]
            numerators.append(nxt)
        return numerators[k]

    def oracle(k: int, t: Fraction) -> Fraction:
        q_val = _poly_eval(q, t)
        return _poly_eval(numerator(k), t) / q_val ** (k + 1)

    return LiftedFunction(
        oracle=oracle,
        domain=lambda t: _poly_eval(q, t) != 0,
        label="rational",
    )


def _pad(a, b):
    size = max(len(a), len(b))
    a = a + [Fraction(0)] * (size - len(a))
    b = b + [Fraction(0)] * (size - len(b))
    return zip(a, b)


def power_fn(
    alpha, mode: str = "exact", digits: int = DEFAULT_DECIMAL_DIGITS
) -> LiftedFunction:
    """The power function t**alpha.

    Derivatives are falling-factorial multiples of t**(alpha-k).  For
    non-integer alpha the domain is t > 0 and, in exact mode, t**(alpha-k)
    must have an exact rational value; decimal mode approximates it at
    the configured precision instead.
    """
    alpha = as_rational(alpha)
    is_integer = alpha.denominator == 1
    if is_integer and alpha >= 0:
        coeffs = [Fraction(0)] * int(alpha) + [Fraction(1)]
        fn = polynomial_fn(coeffs)
        return replace(fn, label=f"t^{alpha}")

    def domain(t: Fraction) -> bool:
        return t != 0 if is_integer else t > 0

    def oracle(k: int, t: Fraction) -> Fraction:
        falling = Fraction(1)
        for i in range(k):
            falling *= alpha - i
        if falling == 0:
            return Fraction(0)
        exponent = alpha - k
        if mode == "exact":
            return falling * rational_pow(t, exponent)
        return falling * _decimal_power(t, exponent, digits)

    return LiftedFunction(
        oracle=oracle, domain=domain, mode=mode, digits=digits, label=f"t^{alpha}"
    )


# ----------------------------------------------------------------------
# fixed-precision transcendental oracles

# These functions have irrational values at almost every rational point,
# so their standard parts are carried as fixed-precision decimals and
# converted to exact rationals before entering series arithmetic.


def _to_decimal(t: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        return Decimal(t.numerator) / Decimal(t.denominator)


def _decimal_power(t: Fraction, exponent: Fraction, digits: int) -> Fraction:
    from .errors import IrrationalLeadingCoefficientError

    try:
        return rational_pow(t, exponent)
    except IrrationalLeadingCoefficientError:
        pass
    with localcontext() as ctx:
        ctx.prec = digits + 10
        value = _to_decimal(t, digits)
        result = (value.ln() * Decimal(exponent.numerator)
                  / Decimal(exponent.denominator)).exp()
        ctx.prec = digits
        return Fraction(+result)


def _decimal_sin_cos(t: Fraction, digits: int):
    # Taylor summation at extended precision, stopping once the partial
    # sums stop moving at the working precision.
    with localcontext() as ctx:
        ctx.prec = digits + 12
        x = _to_decimal(t, digits)
        xx = x * x

        i, last, sin_acc, fact, num, sign = 1, 0, x, 1, x, 1
        while sin_acc != last:
            last = sin_acc
            i += 2
            fact *= i * (i - 1)
            num *= xx
            sign *= -1
            sin_acc += num / fact * sign

        i, last, cos_acc, fact, num, sign = 0, 0, Decimal(1), 1, 1, 1
        while cos_acc != last:
            last = cos_acc
            i += 2
            fact *= i * (i - 1)
            num *= xx
            sign *= -1
            cos_acc += num / fact * sign

        ctx.prec = digits
        return +sin_acc, +cos_acc


def exp_fn(digits: int = DEFAULT_DECIMAL_DIGITS) -> LiftedFunction:
    """Exponential; every derivative is the function itself."""

    def oracle(k: int, t: Fraction) -> Fraction:
        if t == 0:
            return Fraction(1)
        with localcontext() as ctx:
            ctx.prec = digits
            return Fraction(_to_decimal(t, digits).exp())

    return LiftedFunction(oracle=oracle, mode="decimal", digits=digits, label="exp")


def log_fn(digits: int = DEFAULT_DECIMAL_DIGITS) -> LiftedFunction:
    """Natural logarithm on t > 0.

    Only the value itself needs decimals; every higher derivative
    (-1)**(k-1) (k-1)! / t**k is an exact rational.
    """

    def oracle(k: int, t: Fraction) -> Fraction:
        if k == 0:
            if t == 1:
                return Fraction(0)
            with localcontext() as ctx:
                ctx.prec = digits
                return Fraction(_to_decimal(t, digits).ln())
        return Fraction((-1) ** (k - 1) * factorial(k - 1)) / t**k

    return LiftedFunction(
        oracle=oracle,
        domain=lambda t: t > 0,
        mode="decimal",
        digits=digits,
        label="log",
    )


def sin_fn(digits: int = DEFAULT_DECIMAL_DIGITS) -> LiftedFunction:
    """Sine; derivatives cycle through sin, cos, -sin, -cos."""

    def oracle(k: int, t: Fraction) -> Fraction:
        # Negate after the exact conversion: unary minus on a Decimal
        # rounds to the ambient context and would corrupt the digits.
        sin_t, cos_t = map(Fraction, _decimal_sin_cos(t, digits))
        return (sin_t, cos_t, -sin_t, -cos_t)[k % 4]

    return LiftedFunction(oracle=oracle, mode="decimal", digits=digits, label="sin")


def cos_fn(digits: int = DEFAULT_DECIMAL_DIGITS) -> LiftedFunction:
    """Cosine; derivatives cycle through cos, -sin, -cos, sin."""

    def oracle(k: int, t: Fraction) -> Fraction:
        sin_t, cos_t = map(Fraction, _decimal_sin_cos(t, digits))
        return (cos_t, -sin_t, -cos_t, sin_t)[k % 4]

    return LiftedFunction(oracle=oracle, mode="decimal", digits=digits, label="cos")
