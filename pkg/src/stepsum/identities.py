"""Abel-summation identities: sums recovered from integrals of step functions.

Every route here has the same shape.  A finite sum over atoms is rewritten
as a boundary term at x plus an integral of the running step function, and
the integral is evaluated in closed form by jump_series.  Each function has
a direct-summation counterpart (in primes.PrimeTable or harmonic_direct)
that serves as its oracle in the test suite; the two sides never share
code beyond the input data.

Float mode carries compensated summation end to end.  Exact mode accepts
and returns rationals (Fraction, int, gmpy2.mpq) and turns every check
into an equality.
"""

import math
from fractions import Fraction
from numbers import Rational, Real

from .errors import DomainError
from .jump_series import (
    Kernel,
    build_jump_series,
    integrate_kernel_times_step,
    _rational_pow,
)

__all__ = [
    "count_via_abel",
    "power_sum_via_abel",
    "reciprocal_power_sum_via_abel",
    "natural_reciprocal_series",
    "harmonic_direct",
    "harmonic_via_identity",
    "iter_harmonic_identity",
    "floor_via_identity",
    "triangular_via_identity",
    "prime_count_via_identity",
    "prime_sum_via_identity",
    "prime_reciprocal_sum_via_prime_sums",
    "prime_reciprocal_sum_via_pi",
]


# =====================================================================
# General finite sets
# =====================================================================


def _require_point_at_or_after(series, x):
    if len(series) == 0:
        raise DomainError("series has no atoms")
    if x < series.domain_min:
        raise DomainError(
            f"evaluation point {x} is below the first jump at {series.domain_min}"
        )


def count_via_abel(series, x):
    """Number of atoms at or below x, recovered without counting.

    For the reciprocal series h (atoms (q, 1/q)) this is
    x*h(x) - integral of h from the first jump to x.
    """
    _require_point_at_or_after(series, x)
    boundary = x * series.value(x)
    integral = integrate_kernel_times_step(
        series, Kernel.power(0), series.domain_min, x
    )
    return boundary - integral


def power_sum_via_abel(series, x, k):
    """Sum of q**(k+1) * w over atoms (q, w) at or below x.

    For the reciprocal series this yields the power sum of the set:
    x**(k+1) * h(x) - (k+1) * integral of y**k * h(y).
    """
    if not isinstance(k, Real):
        raise DomainError(f"exponent must be real, got {k!r}")
    _require_point_at_or_after(series, x)
    boundary = _rational_pow(x, k + 1) * series.value(x)
    integral = integrate_kernel_times_step(
        series, Kernel.power(k), series.domain_min, x
    )
    return boundary - (k + 1) * integral


def reciprocal_power_sum_via_abel(cumulative_series, x, k):
    """Sum of q**(-k) over the set whose running total is the given series.

    ``cumulative_series`` must carry atoms (q, q), so its value at y is
    G(y), the sum of the set's elements up to y.  The route is
    G(x)/x**(k+1) + (k+1) * integral of G(y)/y**(k+2).
    """
    if not isinstance(k, Real):
        raise DomainError(f"exponent must be real, got {k!r}")
    if k < 0:
        raise DomainError(f"exponent must be nonnegative, got {k}")
    _require_point_at_or_after(cumulative_series, x)
    boundary = cumulative_series.value(x) * _rational_pow(x, -(k + 1))
    integral = integrate_kernel_times_step(
        cumulative_series, Kernel.power(-(k + 2)), cumulative_series.domain_min, x
    )
    return boundary + (k + 1) * integral


# =====================================================================
# The naturals: harmonic numbers, floor, triangular numbers
# =====================================================================


def _check_at_least(x, lower, what):
    if not isinstance(x, Real):
        raise DomainError(f"{what} must be real, got {x!r}")
    if isinstance(x, float) and not math.isfinite(x):
        raise DomainError(f"{what} must be finite, got {x}")
    if x < lower:
        raise DomainError(f"{what} must be at least {lower}, got {x}")


def _point(x, exact):
    if exact:
        return x if isinstance(x, Rational) else Fraction(x)
    return float(x)


def natural_reciprocal_series(n, *, exact=False):
    """The series with atoms (i, 1/i) for i = 1..n."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"need a positive int, got {n!r}")
    if exact:
        return build_jump_series((i, Fraction(1, i)) for i in range(1, n + 1))
    return build_jump_series((float(i), 1.0 / i) for i in range(1, n + 1))


def harmonic_direct(x, *, exact=False):
    """H(x): sum of 1/n for n <= x, by direct compensated (or exact) summation."""
    _check_at_least(x, 1, "harmonic argument")
    n = math.floor(x)
    if exact:
        total = Fraction(0)
        for i in range(1, n + 1):
            total += Fraction(1, i)
        return total
    return math.fsum(1.0 / i for i in range(1, n + 1))


def harmonic_via_identity(x, *, exact=False):
    """H(x) from the floor function: a boundary term plus one short integral.

    H(x) = (floor(x) + floor(x)**2) / (2 x**2) plus the integral from 1 to x
    of (floor(y) + floor(y)**2) / y**3, the integral summed in closed form
    over the unit segments of the floor function.
    """
    _check_at_least(x, 1, "harmonic argument")
    n = math.floor(x)
    if exact:
        xq = _point(x, True)
        total = Fraction(n + n * n, 2) / (xq * xq)
        for i in range(1, n):
            total += Fraction(2 * i + 1, 2 * i * (i + 1))
        if xq > n:
            total += (n + n * n) * (xq - n) * (xq + n) / (2 * n * n * xq * xq)
        return total
    fx = float(x)
    terms = [(n + n * n) / (2.0 * fx * fx)]
    terms.extend((2.0 * i + 1.0) / (2.0 * i * (i + 1.0)) for i in range(1, n))
    if fx > n:
        terms.append((n + n * n) * (fx - n) * (fx + n) / (2.0 * n * n * fx * fx))
    return math.fsum(terms)


def iter_harmonic_identity(n_max):
    """Yield (n, identity-route H(n)) for n = 1..n_max in exact rationals.

    The segment integrals accumulate incrementally, so sweeping every
    integer up to n_max costs one new term per step instead of a fresh
    O(n) pass per point.
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise DomainError(f"need a positive int, got {n_max!r}")
    integral = Fraction(0)
    for n in range(1, n_max + 1):
        if n > 1:
            i = n - 1
            integral += Fraction(2 * i + 1, 2 * i * (i + 1))
        yield n, Fraction(n + n * n, 2 * n * n) + integral


def floor_via_identity(x, *, exact=False):
    """floor(x) recovered as the atom count of the naturals' reciprocal series."""
    _check_at_least(x, 1, "argument")
    series = natural_reciprocal_series(math.floor(x), exact=exact)
    return count_via_abel(series, _point(x, exact))


def triangular_via_identity(x, *, exact=False):
    """1 + 2 + ... + floor(x) via the power-sum route with k = 1."""
    _check_at_least(x, 1, "argument")
    series = natural_reciprocal_series(math.floor(x), exact=exact)
    return power_sum_via_abel(series, _point(x, exact), 1)


# =====================================================================
# Primes
# =====================================================================


def _reciprocal_prime_series(table, x, exact):
    ps = table.primes_leq(x).tolist()
    if exact:
        return build_jump_series((p, Fraction(1, p)) for p in ps)
    return build_jump_series((float(p), 1.0 / p) for p in ps)


def prime_count_via_identity(table, x, *, exact=False):
    """pi(x) = x * h(x) - integral of h from 2 to x, h the prime reciprocal sum."""
    series = _reciprocal_prime_series(table, x, exact)
    return count_via_abel(series, _point(x, exact))


def prime_sum_via_identity(table, x, *, exact=False):
    """Sum of primes <= x: x**2 * h(x) - 2 * integral of y * h(y)."""
    series = _reciprocal_prime_series(table, x, exact)
    return power_sum_via_abel(series, _point(x, exact), 1)


def prime_reciprocal_sum_via_prime_sums(table, x, *, exact=False):
    """Sum of 1/p via the running sum of primes G(y).

    G(x)/x**2 + 2 * integral of G(y)/y**3 from 2 to x; the reciprocal
    power-sum route with k = 1 over the series with atoms (p, p).
    """
    ps = table.primes_leq(x).tolist()
    if exact:
        series = build_jump_series((p, p) for p in ps)
    else:
        series = build_jump_series((float(p), float(p)) for p in ps)
    return reciprocal_power_sum_via_abel(series, _point(x, exact), 1)


def prime_reciprocal_sum_via_pi(table, x, *, exact=False):
    """Sum of 1/p from the prime counting function.

    pi(x)/x + integral from 2 to x of pi(y)/y**2; the step is the counting
    series with unit weights at the primes.
    """
    ps = table.primes_leq(x).tolist()
    if exact:
        series = build_jump_series((p, 1) for p in ps)
    else:
        series = build_jump_series((float(p), 1.0) for p in ps)
    xq = _point(x, exact)
    _require_point_at_or_after(series, xq)
    boundary = series.value(xq) * _rational_pow(xq, -1)
    integral = integrate_kernel_times_step(
        series, Kernel.power(-2), series.domain_min, xq
    )
    return boundary + integral
