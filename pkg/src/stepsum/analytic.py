"""The analytic layer: the offset logarithmic integral, the Mertens
remainder, and the identities that connect prime counts to them.

Everything here is float-only; the logarithms rule out exact rationals.
The one numerical subtlety worth naming: differences of log log values are
always computed through the same cancellation-safe form the integrator
uses for the 1/(y log y) antiderivative, so the pieces that cancel
algebraically cancel bitwise here too (the boundary checks at x = 2
come out exact because of it).
"""

import math
from dataclasses import dataclass

from . import quadrature
from .errors import DomainError
from .jump_series import (
    INV_LOG,
    INV_Y_LOG,
    INV_Y_LOG_SQ,
    Y_OVER_LOG,
    QUAD_ABS_TOL,
    QUAD_MAX_PANELS,
    SmoothTerm,
    StepPlusSmooth,
    _antiderivative_diff,
    build_jump_series,
    integrate_kernel_times_step,
    stieltjes_integrate,
)
from .report import IdentityId, make_report

__all__ = [
    "LiValue",
    "li_from_2",
    "mertens_remainder",
    "prime_count_via_li",
    "prime_reciprocal_sum_via_mertens",
    "check_reciprocal_sum_increment",
]


@dataclass(frozen=True)
class LiValue:
    """Value of the logarithmic integral taken from 2, with an error bound."""

    x: float
    value: float
    abs_err_bound: float


def _check_analytic_point(x, what="x"):
    fx = float(x)
    if not math.isfinite(fx):
        raise DomainError(f"{what} must be finite, got {x}")
    if fx < 2.0:
        raise DomainError(f"{what} must be at least 2, got {x}")
    return fx


def li_from_2(x, *, abs_tol=QUAD_ABS_TOL):
    """Integral of 1/log t from 2 to x, by adaptive quadrature.

    Starting at 2 keeps the singularity of 1/log t at t = 1 strictly
    outside every panel, so no principal value is ever involved.
    """
    fx = _check_analytic_point(x)
    value, err = quadrature.integrate(
        INV_LOG, 2.0, fx, abs_tol=abs_tol, max_panels=QUAD_MAX_PANELS
    )
    return LiValue(x=fx, value=value, abs_err_bound=err)


def _log_weight_series(table, x, *, above=None):
    """Atoms (p, log(p)/p) for primes p <= x, optionally only p > above."""
    ps = table.primes_leq(x).tolist()
    if above is not None:
        ps = [p for p in ps if p > above]
    return build_jump_series((float(p), math.log(p) / p) for p in ps)


def _log_log_diff(a, b):
    """log log b - log log a, stable when b is near a (needs 1 < a <= b)."""
    return _antiderivative_diff(INV_Y_LOG, a, b, False)


def mertens_remainder(table, x):
    """R(x) = sum of log(p)/p over p <= x, minus log x.

    Slowly tends to a small negative constant; used on [2, x] as the
    fluctuating part of the prime log-weight sum.
    """
    fx = _check_analytic_point(x)
    measure = StepPlusSmooth(_log_weight_series(table, fx), SmoothTerm.NEG_LOG)
    return measure.value(fx)


def prime_count_via_li(table, x):
    """pi(x) recovered from li and the Mertens remainder measure.

    li_from_2(x) plus the Stieltjes integral of y/log y against dR over
    [2, x], plus 1.  The atom at p = 2 is absorbed into the constant, so
    the step part starts strictly above 2 and the check at x = 2 reduces
    to exactly 1.
    """
    fx = _check_analytic_point(x)
    measure = StepPlusSmooth(
        _log_weight_series(table, fx, above=2), SmoothTerm.NEG_LOG
    )
    s = stieltjes_integrate(Y_OVER_LOG, measure, 2.0, fx)
    return li_from_2(fx).value + s + 1.0


def prime_reciprocal_sum_via_mertens(table, x):
    """Sum of 1/p over p <= x, reassembled from the Mertens form.

    log log x + 1 - log log 2, plus the integral of R(y)/(y log^2 y) over
    [2, x], plus R(x)/log x.  The integral splits into the step part (in
    closed form against 1/(y log^2 y)) and a -log y part whose integral
    cancels the log log difference exactly.
    """
    fx = _check_analytic_point(x)
    series = _log_weight_series(table, fx)
    d = _log_log_diff(2.0, fx)
    step_part = integrate_kernel_times_step(series, INV_Y_LOG_SQ, 2.0, fx)
    remainder = StepPlusSmooth(series, SmoothTerm.NEG_LOG).value(fx)
    return (1.0 + d) + (step_part - d) + remainder / math.log(fx)


def check_reciprocal_sum_increment(table, a, b, *, tol=1e-10):
    """Check the increment of the prime reciprocal sum over (a, b].

    Direct side: reciprocal_sum(b) - reciprocal_sum(a).  Identity side:
    log log b - log log a plus the Stieltjes integral of 1/log y against
    dR over the subinterval, the step restricted to primes strictly above
    a so the measure matches the half-open increment.
    """
    fa = _check_analytic_point(a, "a")
    fb = _check_analytic_point(b, "b")
    if fa > fb:
        raise DomainError(f"interval out of order: [{a}, {b}]")
    lhs = table.reciprocal_sum(fb) - table.reciprocal_sum(fa)
    measure = StepPlusSmooth(
        _log_weight_series(table, fb, above=fa), SmoothTerm.NEG_LOG
    )
    rhs = _log_log_diff(fa, fb) + stieltjes_integrate(INV_LOG, measure, fa, fb)
    return make_report(
        IdentityId.HP_INCREMENT, x=fa, lhs=lhs, rhs=rhs, tol=tol, k=fb
    )
