"""Exact arithmetic on ordered series with infinitesimals.

The package builds three nested exact number systems on one
representation, a truncated series in the infinite unit S with the
infinitesimal o = 1/S as its inverse:

* series in o with rational coefficients (an ordered algebra over the
  rationals, lexicographically ordered so that 0 < o < every positive
  rational);
* infinite integers, polynomials in S closed under sum and product,
  each defined to within one unit by a genuine successor;
* the full ordered field of series with finitely many infinite terms,
  where every nonzero element is invertible and an integer multiple of
  any positive element overtakes any other element.

On top of the arithmetic sit an analytic lift of smooth functions into
the infinitesimal neighborhood of a standard point, two interconvertible
families of higher differentials with exact conversion tables, and a
discrete integral over the o-stepped lattice whose standard part is the
ordinary integral.
"""

from .coefficients import (
    bernoulli,
    binomial_general,
    k_coeff,
    stirling1_unsigned,
    stirling2,
    x_coeff,
)
from .errors import (
    DivisionByZeroError,
    ExprSyntaxError,
    FractionalLeadingExponentError,
    IndistinguishableError,
    IrrationalLeadingCoefficientError,
    MathDomainError,
    NegativeBaseError,
    NotCauchyError,
    OmegaError,
    PrecisionError,
    PrecisionExhaustedError,
)
from .expressions import Expression, evaluate, parse
from .integers import (
    ALEPH_ONE,
    ALEPH_ZERO,
    SIGMA,
    AlephNumber,
    R1Interval,
    R1Point,
    archimedean_witness,
    compare_aleph,
    count_interval,
    embed,
    integer_truncation,
    oplus,
    oplus_inductive,
    otimes,
    otimes_inductive,
    phi,
    predecessor,
    psi,
    successor,
)
from .integration import (
    PolynomialFn,
    difference_equation_check,
    discrete_integral,
    faulhaber,
    ns_continuity_check,
    riemann,
)
from .lifting import (
    CoeffTable,
    D_to_d_table,
    LiftedFunction,
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
    polynomial_fn,
    power_fn,
    rational_fn,
    sin_fn,
)
from .rationals import Rational, as_rational, rational_pow
from .series import (
    DEFAULT_DEPTH,
    ONE,
    S,
    ZERO,
    ComparisonResult,
    OmegaNumber,
    cauchy_limit,
    expand_rational,
    o,
    omega,
)

__version__ = "0.1.0"
