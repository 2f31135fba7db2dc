from fractions import Fraction

import pytest

from omegafield import (
    CoeffTable,
    D_to_d_table,
    MathDomainError,
    ONE,
    OmegaNumber,
    S,
    ZERO,
    cos_fn,
    d_to_D_table,
    derivative,
    difference,
    difference_iterated,
    differential,
    exp_fn,
    lift_eval,
    log_fn,
    ns_diff_check,
    o,
    omega,
    polynomial_fn,
    power_fn,
    rational_fn,
    sin_fn,
)
from conftest import random_infinitesimal, random_rational


def random_polynomial(rng, max_degree=6):
    degree = rng.randint(0, max_degree)
    coeffs = [random_rational(rng) for _ in range(degree)]
    coeffs.append(random_rational(rng, nonzero=True))
    return polynomial_fn(coeffs)


class TestLiftEval:
    def test_square_polynomial(self):
        f = polynomial_fn([0, 0, 1])
        value = lift_eval(f, ONE + o, 5)
        assert value == ONE + 2 * o + OmegaNumber.single(-2, 1)
        assert value.is_exact

    def test_square_root(self):
        f = power_fn(Fraction(1, 2))
        value = lift_eval(f, ONE + o, 4)
        assert [value.coefficient(-k) for k in range(5)] == [
            Fraction(1),
            Fraction(1, 2),
            Fraction(-1, 8),
            Fraction(1, 16),
            Fraction(-5, 128),
        ]

    def test_reciprocal(self):
        f = rational_fn([1], [0, 1])
        value = lift_eval(f, ONE + o, 3)
        assert value == OmegaNumber(
            [(0, 1), (-1, -1), (-2, 1), (-3, -1)], floor=-3
        )

    def test_matches_power_minus_one(self):
        f = rational_fn([1], [0, 1])
        g = power_fn(-1)
        x = omega(Fraction(3, 2)) + 2 * o
        assert lift_eval(f, x, 6) == lift_eval(g, x, 6)

    def test_domain_violation(self):
        f = rational_fn([1], [0, 1])
        with pytest.raises(MathDomainError):
            lift_eval(f, o, 4)  # standard part 0 is a pole

    def test_infinite_argument_rejected(self):
        f = polynomial_fn([0, 1])
        with pytest.raises(MathDomainError):
            lift_eval(f, S, 4)

    def test_truncated_argument_floor_propagates(self):
        f = polynomial_fn([0, 0, 1])
        x = ONE + OmegaNumber([(-1, 1)], floor=-2)
        value = lift_eval(f, x, 8)
        assert value.floor == -2
        assert value.coefficient(-1) == 2

    def test_polynomial_identity_random(self, rng):
        for _ in range(25):
            f = random_polynomial(rng, max_degree=4)
            x = omega(random_rational(rng)) + random_infinitesimal(rng)
            direct = ZERO
            for j, c in enumerate(f_coeffs(f)):
                direct = direct + OmegaNumber.single(0, c) * x**j
            assert lift_eval(f, x, 24) == direct


def f_coeffs(f):
    # Recover polynomial coefficients from the oracle at t = 0.
    import math

    return [
        f.derivative_at(k, Fraction(0)) / math.factorial(k)
        for k in range(f.degree + 1)
    ]


class TestDerivative:
    def test_cube(self):
        f = polynomial_fn([0, 0, 0, 1])
        assert derivative(f, 1).derivative_at(0, Fraction(2)) == 12

    def test_identity_at_zero_order(self):
        f = polynomial_fn([1, 2, 3])
        assert derivative(f, 0) is f

    def test_exponential_fixed_point(self):
        f = exp_fn()
        for q in (1, 3, 7):
            assert derivative(f, q).derivative_at(0, Fraction(0)) == 1

    def test_lift_of_derivative_is_derivative_of_lift(self, rng):
        # Compare against the coefficientwise derivative of the lifted
        # series in the step variable.
        f = polynomial_fn([1, -2, 0, 5])
        t = Fraction(2, 3)
        base = omega(t)
        for q in (1, 2):
            lifted = lift_eval(derivative(f, q), base + o, 10)
            assert lifted.coefficient(0) == derivative(f, q).derivative_at(0, t)


class TestDifference:
    def test_first_difference_of_square(self, rng):
        f = polynomial_fn([0, 0, 1])
        for _ in range(10):
            t = random_rational(rng)
            value = difference(f, omega(t), 1, 8)
            assert value == OmegaNumber([(-1, 2 * t), (-2, 1)])

    def test_annihilates_low_degree(self, rng):
        for p in range(1, 6):
            f = random_polynomial(rng, max_degree=p - 1)
            x = omega(random_rational(rng))
            assert difference(f, x, p, 12) == ZERO

    def test_cube_at_zero(self):
        f = polynomial_fn([0, 0, 0, 1])
        assert difference(f, ZERO, 3, 8) == OmegaNumber.single(-3, 6)

    def test_order_at_least_p(self, rng):
        for _ in range(20):
            f = random_polynomial(rng)
            p = rng.randint(1, 4)
            if f.degree < p:
                continue
            value = difference(f, omega(random_rational(rng)), p, 16)
            if not value.is_zero:
                assert value.ord_o() >= p

    def test_iterated_matches_closed_form(self, rng):
        for _ in range(20):
            f = random_polynomial(rng)
            p = rng.randint(1, 5)
            x = omega(random_rational(rng)) + random_infinitesimal(rng, lo=-2)
            assert difference_iterated(f, x, p, 14) == difference(f, x, p, 14)


class TestDifferential:
    def test_first_order(self, rng):
        f = polynomial_fn([0, 0, 1])
        t = random_rational(rng)
        assert differential(f, omega(t), 1, 8) == OmegaNumber.single(-1, 2 * t)

    def test_third_order_cube(self):
        f = polynomial_fn([0, 0, 0, 1])
        assert differential(f, ONE, 3, 8) == OmegaNumber.single(-3, 6)

    def test_zero_order_is_lift(self, rng):
        f = random_polynomial(rng)
        x = omega(random_rational(rng)) + random_infinitesimal(rng)
        assert differential(f, x, 0, 10) == lift_eval(f, x, 10)


class TestTables:
    def test_forward_rows(self):
        table = d_to_D_table(4)
        assert table.row(1) == (1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))
        assert table.row(2) == (1, 1, Fraction(7, 12))
        assert table.row(3) == (1, Fraction(3, 2))
        assert table.row(4) == (1,)

    def test_backward_rows(self):
        table = D_to_d_table(4)
        assert table.row(1) == (
            1,
            Fraction(-1, 2),
            Fraction(1, 3),
            Fraction(-1, 4),
        )
        assert table.row(2) == (1, -1, Fraction(11, 12))
        assert table.row(3) == (1, Fraction(-3, 2))

    def test_single_order(self):
        assert d_to_D_table(1).rows == ((Fraction(1),),)

    def test_round_trip_identity(self):
        cutoff = 8
        forward = d_to_D_table(cutoff)
        backward = D_to_d_table(cutoff)
        for i in range(1, cutoff + 1):
            for j in range(1, cutoff + 1):
                total = sum(
                    backward.entry(i, p) * forward.entry(p, j)
                    for p in range(1, cutoff + 1)
                )
                assert total == (1 if i == j else 0)

    def test_expansion_identity(self, rng):
        # The order-p difference expands over higher differentials with
        # the forward-table weights, exactly, for polynomials.
        for _ in range(15):
            f = random_polynomial(rng)
            t = omega(random_rational(rng))
            table = d_to_D_table(max(f.degree, 1))
            for p in range(1, f.degree + 1):
                expected = ZERO
                for n in range(p, f.degree + 1):
                    expected = expected + OmegaNumber.single(
                        0, table.entry(p, n)
                    ) * differential(f, t, n, 16)
                assert difference(f, t, p, 16) == expected

    def test_inverse_identity(self, rng):
        # Differentials expand over differences with the backward table.
        for _ in range(15):
            f = random_polynomial(rng)
            t = omega(random_rational(rng))
            table = D_to_d_table(max(f.degree, 1))
            for n in range(1, f.degree + 1):
                expected = ZERO
                for p in range(n, f.degree + 1):
                    expected = expected + OmegaNumber.single(
                        0, table.entry(n, p)
                    ) * difference(f, t, p, 16)
                assert differential(f, t, n, 16) == expected

    def test_json_round_trip(self):
        table = D_to_d_table(5)
        data = table.to_json()
        assert data["kind"] == "coeff_table"
        assert data["direction"] == "D_to_d"
        assert data["cutoff"] == 5
        assert CoeffTable.from_json(data) == table


class TestTaylorShift:
    def test_shift_identity_exact(self, rng):
        import math

        depth = 8
        for _ in range(25):
            f = random_polynomial(rng)
            u = random_infinitesimal(rng, lo=-3)
            v = random_infinitesimal(rng, lo=-3)
            x = omega(random_rational(rng)) + u
            left = lift_eval(f, x + v, depth)
            right = ZERO
            for q in range(depth + 1):
                term = lift_eval(derivative(f, q), x, depth)
                right = right + term * v**q * OmegaNumber.single(
                    0, Fraction(1, math.factorial(q))
                )
            assert left.agrees_with(right)


class TestNsDiffCheck:
    def test_square(self):
        f = polynomial_fn([0, 0, 1])
        assert ns_diff_check(f, Fraction(1), o)

    def test_cube_with_higher_step(self):
        f = polynomial_fn([0, 0, 0, 1])
        assert ns_diff_check(f, Fraction(2), OmegaNumber.single(-2, 1))

    def test_linear_zero_remainder(self):
        f = polynomial_fn([3, 2])
        h = OmegaNumber([(-1, 3), (-2, 1)])
        assert ns_diff_check(f, Fraction(1), h)

    def test_non_infinitesimal_step_rejected(self):
        f = polynomial_fn([0, 1])
        with pytest.raises(MathDomainError):
            ns_diff_check(f, Fraction(0), ONE)


class TestTranscendental:
    def test_exp_at_infinitesimal(self):
        value = lift_eval(exp_fn(), o, 4)
        assert [value.coefficient(-k) for k in range(5)] == [
            Fraction(1),
            Fraction(1),
            Fraction(1, 2),
            Fraction(1, 6),
            Fraction(1, 24),
        ]

    def test_exp_standard_value_50_digits(self):
        # Frozen leading digits of e.
        reference = Fraction(
            "2.7182818284590452353602874713526624977572470937"
        )
        value = lift_eval(exp_fn(), ONE, 0).standard_part()
        assert abs(value - reference) < Fraction(1, 10**45)

    def test_log_series_exact_tail(self):
        value = lift_eval(log_fn(), ONE + o, 5)
        assert value == OmegaNumber(
            [
                (-1, 1),
                (-2, Fraction(-1, 2)),
                (-3, Fraction(1, 3)),
                (-4, Fraction(-1, 4)),
                (-5, Fraction(1, 5)),
            ],
            floor=-5,
        )

    def test_log_domain(self):
        with pytest.raises(MathDomainError):
            lift_eval(log_fn(), omega(-1) + o, 3)

    def test_sin_cos_at_zero(self):
        sine = lift_eval(sin_fn(), o, 5)
        assert sine.coefficient(-1) == 1
        assert sine.coefficient(-3) == Fraction(-1, 6)
        assert sine.coefficient(-5) == Fraction(1, 120)
        cosine = lift_eval(cos_fn(), o, 4)
        assert cosine.coefficient(0) == 1
        assert cosine.coefficient(-2) == Fraction(-1, 2)
        assert cosine.coefficient(-4) == Fraction(1, 24)

    def test_pythagorean_identity_to_depth(self):
        x = omega(Fraction(1, 3)) + o
        sine = lift_eval(sin_fn(), x, 6)
        cosine = lift_eval(cos_fn(), x, 6)
        total = sine * sine + cosine * cosine
        assert abs(total.coefficient(0) - 1) < Fraction(1, 10**45)
        for k in range(1, 7):
            assert abs(total.coefficient(-k)) < Fraction(1, 10**40)
