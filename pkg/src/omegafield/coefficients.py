"""Combinatorial coefficient families used across the library.

Everything here is computed in exact integer or rational arithmetic:
generalized binomial coefficients, Bernoulli numbers, the alternating
finite-difference sums ``x_coeff``, the symmetric-product sums
``k_coeff``, and the two Stirling triangles kept as independent oracles
for them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .rationals import as_rational


def binomial_general(alpha, k: int) -> Fraction:
    """Generalized binomial coefficient alpha(alpha-1)...(alpha-k+1)/k!.

    Defined for any rational alpha; for integer alpha >= k it agrees with
    the ordinary binomial coefficient.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    alpha = as_rational(alpha)
    num = Fraction(1)
    for i in range(k):
        num *= alpha - i
    return num / math.factorial(k)


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number with the B_1 = -1/2 sign convention.

    That convention makes sum(n**j for n in range(L)) a clean polynomial
    in L (see ``integration.faulhaber``).  Values are produced by the
    recurrence sum(C(m+1, k) * B_k for k in 0..m) = 0.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(m):
        acc += math.comb(m + 1, k) * bernoulli(k)
    return -acc / (m + 1)


def x_coeff(p: int, n: int) -> int:
    """Alternating sum over k of (-1)^(p-k) * C(p,k) * k^n, with 0^0 = 1.

    Vanishes for n < p and equals p! on the diagonal n = p.
    """
    if p < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    total = 0
    for k in range(p + 1):
        power = 1 if n == 0 else k**n
        total += (-1) ** (p - k) * math.comb(p, k) * power
    return total


def k_coeff(m: int, j: int) -> int:
    """Sum of all products of j distinct factors taken from 1..m.

    The elementary symmetric polynomial e_j(1, ..., m); the empty product
    gives k_coeff(m, 0) = 1 and the full one k_coeff(m, m) = m!.
    """
    if m < 0 or j < 0:
        raise ValueError("indices must be non-negative")
    if j > m:
        raise ValueError(f"k_coeff undefined for j={j} > m={m}")
    # Row of prod_{i=1..m} (1 + i*t), built coefficient by coefficient.
    row = [1] + [0] * j
    for i in range(1, m + 1):
        for d in range(min(i, j), 0, -1):
            row[d] += i * row[d - 1]
    return row[j]


@lru_cache(maxsize=None)
def stirling2(n: int, p: int) -> int:
    """Stirling number of the second kind, by the triangular recurrence."""
    if n < 0 or p < 0:
        raise ValueError("indices must be non-negative")
    if n == 0 and p == 0:
        return 1
    if n == 0 or p == 0:
        return 0
    return p * stirling2(n - 1, p) + stirling2(n - 1, p - 1)


@lru_cache(maxsize=None)
def stirling1_unsigned(p: int, n: int) -> int:
    """Unsigned Stirling number of the first kind, by its recurrence."""
    if p < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    if p == 0 and n == 0:
        return 1
    if p == 0 or n == 0:
        return 0
    return (p - 1) * stirling1_unsigned(p - 1, n) + stirling1_unsigned(p - 1, n - 1)
