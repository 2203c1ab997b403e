"""Divisor sums of reducible quadratics (n - b)(n - c).

Exact rationals come back as ``fractions.Fraction``. Errors map to
``ValueError`` (bad input), ``OverflowError``, ``MemoryError`` and
``HypothesisNotMet`` (a ``ValueError`` raised when sigma_{-1}(Omega) <= 4/3 fails).
"""

from fractions import Fraction

from ._core import (
    SIX_OVER_PI_SQUARED,
    DeltaDecomposition,
    HypothesisNotMet,
    a_alpha,
    asymptotic_scan,
    big_c,
    big_c2,
    chi_d,
    corollary4_rho_bound,
    corollary4_tau_bound,
    count_roots_in_range,
    decompose_delta,
    decompose_delta_value,
    dominance_report,
    factorize,
    fit_leading_terms,
    is_prime,
    jacobi,
    mu_squared,
    ramare_rhs,
    rho,
    rho_bruteforce,
    rho_over_lambda_sum,
    rho_over_lambda_upper,
    rho_partial_sum,
    rho_prime_power,
    rho_sum_upper,
    roots_mod,
    run_suite,
    suite_names,
    tau,
    tau_quad_sum_exact,
    tau_quad_sum_hyperbola,
    theorem3_bound,
    verify_identity,
    verify_ramare,
    xi_d,
    xi_partial_sum,
)
from . import _core


def sigma(a, n):
    return Fraction(_core._sigma(a, n))


def theta(a, q):
    return Fraction(_core._theta(a, q))


def euler_factor_at_one(p, dec):
    return Fraction(_core._euler_factor_at_one(p, dec))


def g_at_one(dec):
    return Fraction(_core._g_at_one(dec))


def k_at_one(t):
    return Fraction(_core._k_at_one(t))


def condition_check(omega):
    """Returns (sigma_{-1}(omega), passes)."""
    s, ok = _core._condition_check(omega)
    return Fraction(s), ok


def c1(omega):
    return Fraction(_core._c1(omega))


__all__ = [name for name in dir() if not name.startswith("_") and name != "Fraction"]
