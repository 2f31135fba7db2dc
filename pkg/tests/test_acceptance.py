"""Acceptance suite.

Each test prints one PASS/FAIL line per criterion, checks exact equality
throughout (tolerance zero) and enforces the stated runtime budgets.
Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from omegafield import (
    AlephNumber,
    ComparisonResult,
    D_to_d_table,
    FractionalLeadingExponentError,
    NotCauchyError,
    ONE,
    OmegaNumber,
    PolynomialFn,
    R1Point,
    ZERO,
    archimedean_witness,
    cauchy_limit,
    compare_aleph,
    d_to_D_table,
    derivative,
    difference_equation_check,
    discrete_integral,
    embed,
    expand_rational,
    lift_eval,
    ns_diff_check,
    o,
    omega,
    oplus,
    oplus_inductive,
    otimes,
    otimes_inductive,
    phi,
    polynomial_fn,
    psi,
    riemann,
    stirling1_unsigned,
    stirling2,
    successor,
    x_coeff,
    k_coeff,
)
from omegafield.cli import main as cli_main
from conftest import random_infinitesimal, random_omega, random_rational

LT, EQ, GT = ComparisonResult.LT, ComparisonResult.EQ, ComparisonResult.GT


def _check(number, description, body):
    try:
        body()
    except BaseException:
        print(f"[criterion {number:02d}] FAIL  {description}")
        raise
    print(f"[criterion {number:02d}] PASS  {description}")


def _run_cli(*argv):
    import contextlib
    import io

    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = cli_main(list(argv))
    return code, buffer.getvalue()


def test_criterion_01_difftable_rows():
    def body():
        start = time.monotonic()
        code, forward_text = _run_cli("difftable", "--dir", "d_to_D", "--max", "4")
        assert code == 0
        code, backward_text = _run_cli("difftable", "--dir", "D_to_d", "--max", "4")
        assert code == 0
        elapsed = time.monotonic() - start
        forward = forward_text.strip().splitlines()
        backward = backward_text.strip().splitlines()
        assert forward[0] == "p=1: 1, 1/2, 1/6, 1/24"
        assert forward[1] == "p=2: 1, 1, 7/12"
        assert forward[2] == "p=3: 1, 3/2"
        assert backward[0] == "n=1: 1, -1/2, 1/3, -1/4"
        assert backward[1] == "n=2: 1, -1, 11/12"
        assert backward[2] == "n=3: 1, -3/2"
        assert elapsed < 1.0

    _check(1, "difftable emits the exact conversion rows in under 1 s", body)


def test_criterion_02_oracle_equivalence():
    def body():
        for p in range(13):
            for n in range(13):
                assert x_coeff(p, n) == math.factorial(p) * stirling2(n, p)
        for p in range(1, 13):
            for n in range(1, p + 1):
                assert k_coeff(p - 1, p - n) == stirling1_unsigned(p, n)

    _check(2, "coefficient families match their Stirling oracles up to 12", body)


def test_criterion_03_matrix_round_trip():
    def body():
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

    _check(3, "conversion tables are exact mutual inverses to cutoff 8", body)


def test_criterion_04_square_root_series():
    def body():
        series = (ONE + o).pow_alpha(Fraction(1, 2), 4)
        expected = [
            Fraction(1),
            Fraction(1, 2),
            Fraction(-1, 8),
            Fraction(1, 16),
            Fraction(-5, 128),
        ]
        assert [series.coefficient(-k) for k in range(5)] == expected
        with pytest.raises(FractionalLeadingExponentError):
            o.pow_alpha(Fraction(1, 2))

    _check(4, "sqrt(1+o) series is exact; sqrt(o) is rejected", body)


def test_criterion_05_field_properties():
    def body():
        rng = random.Random(501)
        for _ in range(100):
            x = random_omega(rng, lo=-3, hi=3)
            assert (x * x.invert()).agrees_with(ONE)
        rng = random.Random(502)
        for _ in range(200):
            x = random_omega(rng, lo=-5, hi=0)
            y = random_omega(rng, lo=-5, hi=0)
            product = x * y
            assert not product.is_zero
            assert product.ord_o() == x.ord_o() + y.ord_o()

    _check(5, "inverses multiply back to one; valuations add over products", body)


def test_criterion_06_order_axioms():
    def body():
        import functools

        rng = random.Random(601)
        mirror = {LT: GT, GT: LT, EQ: EQ}
        key = functools.cmp_to_key(
            lambda a, b: {LT: -1, EQ: 0, GT: 1}[a.compare(b)]
        )
        for _ in range(500):
            x, y, z = (random_omega(rng, lo=-4, hi=3) for _ in range(3))
            assert y.compare(x) is mirror[x.compare(y)]
            a, b, c = sorted([x, y, z], key=key)
            assert a.compare(b) is not GT
            assert b.compare(c) is not GT
            assert a.compare(c) is not GT
            if x.compare(y) is LT:
                assert (x + z).compare(y + z) is LT
            assert (abs_or_one(x) * abs_or_one(y)).compare(ZERO) is GT

    _check(6, "totality, transitivity and compatibility hold on 500 triples", body)


def abs_or_one(value):
    result = abs(value)
    return result if not result.is_zero else ONE


def test_criterion_07_peano_models():
    def body():
        rng = random.Random(701)
        for _ in range(200):
            if rng.random() < 0.2:
                point = R1Point(Fraction(0), rng.randint(0, 15))
            else:
                point = R1Point(
                    Fraction(rng.randint(1, 9), rng.randint(1, 6)),
                    rng.randint(-12, 12),
                )
            assert psi(phi(point)) == point
        for _ in range(200):
            if rng.random() < 0.2:
                number = AlephNumber((rng.randint(0, 25),))
            else:
                number = AlephNumber(
                    (
                        rng.randint(-12, 12),
                        Fraction(rng.randint(1, 9), rng.randint(1, 6)),
                    )
                )
            assert phi(psi(number)) == number
        for _ in range(100):
            number = random_aleph_sample(rng)
            assert successor(number) != number
            assert compare_aleph(successor(number), number) is GT
        for _ in range(10):
            number = random_aleph_sample(rng)
            for m in range(21):
                assert oplus_inductive(number, m) == oplus(
                    number, AlephNumber((m,))
                )
                assert otimes_inductive(number, m) == otimes(
                    number, AlephNumber((m,))
                )

    _check(7, "lattice/integer bijection, unit precision and inductive laws", body)


def random_aleph_sample(rng):
    degree = rng.randint(0, 3)
    if degree == 0:
        return AlephNumber((rng.randint(0, 30),))
    coeffs = [Fraction(rng.randint(-9, 9))]
    coeffs += [
        Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(degree - 1)
    ]
    coeffs += [Fraction(rng.randint(1, 9), rng.randint(1, 4))]
    return AlephNumber(coeffs)


def test_criterion_08_integration():
    def body():
        start = time.monotonic()
        for j in range(7):
            f = PolynomialFn([0] * j + [1])
            for t in (Fraction(1), Fraction(2), Fraction(3, 2), Fraction(5)):
                value = discrete_integral(f, R1Point(t, 0))
                assert value.standard_part() == t ** (j + 1) / (j + 1)
        rng = random.Random(801)
        for _ in range(50):
            degree = rng.randint(0, 6)
            f = PolynomialFn(
                [random_rational(rng) for _ in range(degree + 1)]
            )
            point = R1Point(
                Fraction(rng.randint(1, 6), rng.randint(1, 4)),
                rng.randint(-8, 8),
            )
            assert difference_equation_check(f, point, random_rational(rng))
        unit = 10**4
        for j in range(7):
            f = PolynomialFn([0] * j + [1])
            t, k = Fraction(3, 2), 7
            value = discrete_integral(f, R1Point(t, k))
            substituted = sum(
                value.coefficient(e) * Fraction(unit) ** e for e in value.support
            )
            count = int(t * unit) + k
            direct = Fraction(sum(n**j for n in range(count)), unit ** (j + 1))
            assert substituted == direct
        assert time.monotonic() - start < 5.0

    _check(8, "integral sums: standard parts, one-step law, surrogate unit", body)


def test_criterion_09_archimedean_witness():
    def body():
        rng = random.Random(901)
        for index in range(100):
            if index % 3 == 0:
                a = abs(random_omega(rng, lo=-4, hi=-1))  # infinitesimal
            else:
                a = abs(random_omega(rng, lo=-3, hi=3))
            if index % 4 == 0:
                b = random_omega(rng, lo=-2, hi=4)
                if b.top < 1:
                    b = b + OmegaNumber.single(rng.randint(1, 4), 1)
            else:
                b = random_omega(rng, lo=-3, hi=3)
            witness = archimedean_witness(a, b)
            assert (embed(successor(witness)) * a).compare(abs(b)) is GT

    _check(9, "a successor multiple of any positive value tops any other", body)


def test_criterion_10_completeness():
    def body():
        limit = cauchy_limit(
            lambda n: OmegaNumber([(-k, 1) for k in range(n + 1)]),
            window=3,
            max_index=40,
            depth=16,
        )
        assert limit == expand_rational([1], [1, -1], 16)
        with pytest.raises(NotCauchyError):
            cauchy_limit(
                lambda n: OmegaNumber.single(-1, (-1) ** n),
                window=2,
                max_index=40,
                depth=4,
            )

    _check(10, "stabilizing sums converge at depth 16; oscillation errors out", body)


def test_criterion_11_differentiability():
    def body():
        rng = random.Random(1101)
        steps = (o, OmegaNumber.single(-2, 1), 3 * o + OmegaNumber.single(-2, 1))
        for _ in range(100):
            degree = rng.randint(0, 6)
            coeffs = [random_rational(rng) for _ in range(degree)]
            coeffs.append(random_rational(rng, nonzero=True))
            f = polynomial_fn(coeffs)
            t = random_rational(rng)
            for h in steps:
                assert ns_diff_check(f, t, h, depth=16)

    _check(11, "lift remainders vanish to twice the step order", body)


def test_criterion_12_taylor_shift():
    def body():
        rng = random.Random(1201)
        depth = 8
        for _ in range(50):
            degree = rng.randint(0, 6)
            coeffs = [random_rational(rng) for _ in range(degree)]
            coeffs.append(random_rational(rng, nonzero=True))
            f = polynomial_fn(coeffs)
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

    _check(12, "shifting the lift matches its derivative expansion to depth 8", body)
