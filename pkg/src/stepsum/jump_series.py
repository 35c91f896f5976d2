"""Step functions built from weighted jumps, and integrals against them.

A jump series is the right-inclusive summatory function of a finite atom
set: F(x) = sum of weights at locations <= x.  Everything downstream
(counting identities, prime sums, the Mertens machinery) reduces to two
integrals computed here:

* integrate_kernel_times_step: the ordinary integral of kernel(y) * F(y),
  evaluated segment by segment between jumps, in closed form whenever the
  kernel has an elementary antiderivative;
* stieltjes_integrate: the integral of a kernel against the measure dF
  (atoms sampled at their locations) plus an optional smooth density.

Arithmetic follows the data.  Rational locations and weights (int,
fractions.Fraction, gmpy2.mpq) flow through power-kernel integrals without
rounding; anything involving a logarithm is evaluated in floats, with the
antiderivative differences arranged to avoid cancellation between nearby
segment endpoints.
"""

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import accumulate
from numbers import Integral, Rational, Real
from typing import NamedTuple

from . import quadrature
from .errors import DomainError

__all__ = [
    "Atom",
    "Kernel",
    "POWER_ZERO",
    "INV_Y_LOG_SQ",
    "INV_Y_LOG",
    "INV_LOG",
    "Y_OVER_LOG",
    "JumpSeries",
    "build_jump_series",
    "SmoothTerm",
    "StepPlusSmooth",
    "integrate_kernel_times_step",
    "stieltjes_integrate",
]

QUAD_ABS_TOL = 1e-12
QUAD_MAX_PANELS = 10**6


class Atom(NamedTuple):
    location: Real
    weight: Real


# =====================================================================
# Kernel catalog
# =====================================================================


@dataclass(frozen=True)
class Kernel:
    """One of the integrand shapes with a known integration strategy.

    Tags: "power" is y**k (exponent k carried alongside), the others are
    1/(y log^2 y), 1/(y log y), 1/log y and y/log y.  The first three have
    elementary antiderivatives; 1/log y and y/log y fall back to adaptive
    quadrature when integrated against a step.
    """

    tag: str
    exponent: Real | None = None

    @classmethod
    def power(cls, k):
        if not isinstance(k, Real):
            raise DomainError(f"power kernel exponent must be real, got {k!r}")
        return cls("power", k)

    def __call__(self, y):
        if self.tag == "power":
            return _rational_pow(y, self.exponent)
        fy = float(y)
        if fy <= 1.0:
            raise DomainError(f"kernel {self.tag} undefined at {y}")
        if self.tag == "inv_y_log_sq":
            return 1.0 / (fy * math.log(fy) ** 2)
        if self.tag == "inv_y_log":
            return 1.0 / (fy * math.log(fy))
        if self.tag == "inv_log":
            return 1.0 / math.log(fy)
        if self.tag == "y_over_log":
            return fy / math.log(fy)
        raise DomainError(f"unknown kernel tag {self.tag!r}")

    @property
    def lower_domain_edge(self):
        """Largest value the integration lower bound must stay above."""
        if self.tag == "power":
            k = self.exponent
            # negative powers blow up at 0; fractional powers need y > 0
            if k < 0 or _integer_exponent(k) is None:
                return 0.0
            return None
        return 1.0

    def check_interval(self, a, b):
        if a > b:
            raise DomainError(f"integration bounds out of order: [{a}, {b}]")
        edge = self.lower_domain_edge
        if edge is not None and a <= edge:
            raise DomainError(
                f"kernel {self.describe()} undefined on [{a}, {b}]: "
                f"lower bound must exceed {edge}"
            )

    def describe(self):
        if self.tag == "power":
            return f"y**{self.exponent}"
        return self.tag


POWER_ZERO = Kernel.power(0)
INV_Y_LOG_SQ = Kernel("inv_y_log_sq")
INV_Y_LOG = Kernel("inv_y_log")
INV_LOG = Kernel("inv_log")
Y_OVER_LOG = Kernel("y_over_log")


def _integer_exponent(k):
    if isinstance(k, Integral):
        return int(k)
    if isinstance(k, Rational) and k.denominator == 1:
        return int(k)
    return None


# abc instance checks are slow enough to matter in the per-segment loops;
# the verdict only depends on the type, so cache it per type.
_INTEGRAL_TYPES: dict = {}
_RATIONAL_TYPES: dict = {}


def _is_integral(value):
    tv = type(value)
    flag = _INTEGRAL_TYPES.get(tv)
    if flag is None:
        flag = _INTEGRAL_TYPES[tv] = isinstance(value, Integral)
    return flag


def _is_rational(value):
    tv = type(value)
    flag = _RATIONAL_TYPES.get(tv)
    if flag is None:
        flag = _RATIONAL_TYPES[tv] = isinstance(value, Rational)
    return flag


def _rational_pow(base, exponent):
    """base ** exponent, keeping integer bases rational under negative powers.

    Plain Python would hand back a float for e.g. 3 ** -2; widening to
    Fraction first preserves exactness for rational pipelines.
    """
    if type(exponent) is int:
        ki = exponent
    else:
        ki = _integer_exponent(exponent)
        if ki is None:
            return base ** exponent
    if ki < 0 and _is_integral(base):
        return Fraction(int(base)) ** ki
    return base ** ki


def _pow_diff(l, r, m):
    """r**m - l**m for 0 < l <= r in floats, stable when r is near l."""
    if r == l:
        return 0.0
    return l**m * math.expm1(m * math.log1p((r - l) / l))


def _log_ratio(l, r):
    """log(r) - log(l) for 0 < l <= r, stable when r is near l."""
    return math.log1p((r - l) / l)


def _antiderivative_diff(kernel, l, r, exact):
    """Integral of the kernel alone over [l, r], via its antiderivative.

    Returns None for kernels without an elementary antiderivative; the
    caller falls back to quadrature.  ``exact`` selects rational
    arithmetic, which is only available for power kernels with integral
    exponent other than -1.
    """
    if kernel.tag == "power":
        k = kernel.exponent
        if exact:
            m = _integer_exponent(k) + 1
            if m == 0:
                raise DomainError("exponent -1 needs the log branch, float only")
            diff = _rational_pow(r, m) - _rational_pow(l, m)
            # plain / would turn int / int into a float; scale by a Fraction
            return diff if m == 1 else diff * Fraction(1, m)
        lf, rf = float(l), float(r)
        ki = _integer_exponent(k)
        m = (ki + 1) if ki is not None else float(k) + 1.0
        if m == 0:
            return _log_ratio(lf, rf)
        return _pow_diff(lf, rf, m) / m
    lf, rf = float(l), float(r)
    if kernel.tag == "inv_y_log_sq":
        # antiderivative -1/log y
        return _log_ratio(lf, rf) / (math.log(lf) * math.log(rf))
    if kernel.tag == "inv_y_log":
        # antiderivative log log y
        return math.log1p(_log_ratio(lf, rf) / math.log(lf))
    return None


# =====================================================================
# Jump series
# =====================================================================


class JumpSeries:
    """Immutable right-inclusive step function; build via build_jump_series."""

    __slots__ = ("_locations", "_weights", "_prefix", "_is_exact")

    def __init__(self, locations, weights):
        self._locations = tuple(locations)
        self._weights = tuple(weights)
        self._prefix = (0,) + tuple(accumulate(self._weights))
        self._is_exact = all(
            _is_rational(v) for v in self._locations + self._weights
        )

    @property
    def locations(self):
        return self._locations

    @property
    def weights(self):
        return self._weights

    @property
    def atoms(self):
        return tuple(Atom(l, w) for l, w in zip(self._locations, self._weights))

    @property
    def domain_min(self):
        return self._locations[0] if self._locations else None

    @property
    def is_exact(self):
        return self._is_exact

    def __len__(self):
        return len(self._locations)

    def __repr__(self):
        n = len(self._locations)
        if n == 0:
            return "JumpSeries(empty)"
        return f"JumpSeries({n} atoms on [{self._locations[0]}, {self._locations[-1]}])"

    def value(self, x):
        """F(x): sum of weights at locations <= x (jumps are inclusive)."""
        _check_finite_point(x)
        return self._prefix[bisect_right(self._locations, x)]

    __call__ = value

    def prefix_value(self, index):
        """Sum of the first ``index`` weights (0 <= index <= len)."""
        return self._prefix[index]


def _check_finite_point(x):
    if isinstance(x, float) and not math.isfinite(x):
        raise DomainError(f"evaluation point must be finite, got {x}")
    if not isinstance(x, Real):
        raise DomainError(f"evaluation point must be real, got {x!r}")


def _check_atom(location, weight):
    if not isinstance(location, Real) or isinstance(location, bool):
        raise DomainError(f"atom location must be a real number, got {location!r}")
    if isinstance(location, float) and not math.isfinite(location):
        raise DomainError(f"atom location must be finite, got {location}")
    if location <= 0:
        raise DomainError(f"atom location must be positive, got {location}")
    if not isinstance(weight, Real) or isinstance(weight, bool):
        raise DomainError(f"atom weight must be a real number, got {weight!r}")
    if isinstance(weight, float) and not math.isfinite(weight):
        raise DomainError(f"atom weight must be finite, got {weight}")


def build_jump_series(points):
    """Build a JumpSeries from (location, weight) pairs.

    Locations must be positive and finite; duplicates are merged by adding
    their weights, and atoms whose merged weight is zero are dropped.
    """
    pairs = []
    for location, weight in points:
        _check_atom(location, weight)
        pairs.append((location, weight))
    pairs.sort(key=lambda p: p[0])
    locations = []
    weights = []
    for location, weight in pairs:
        if locations and locations[-1] == location:
            weights[-1] = weights[-1] + weight
        else:
            locations.append(location)
            weights.append(weight)
    kept = [(l, w) for l, w in zip(locations, weights) if w != 0]
    return JumpSeries([l for l, _ in kept], [w for _, w in kept])


# =====================================================================
# Integral of kernel(y) * F(y) dy
# =====================================================================


def _segments(series, a, b):
    """Yield (left, right, F-value) over the constancy pieces of F in [a, b]."""
    locs = series.locations
    i0 = bisect_right(locs, a)
    i1 = bisect_left(locs, b)
    left = a
    value_index = i0
    for i in range(i0, i1):
        right = locs[i]
        if right > left:
            yield left, right, series.prefix_value(value_index)
        left = right
        value_index = i + 1
    if b > left:
        yield left, b, series.prefix_value(value_index)


def integrate_kernel_times_step(series, kernel, a, b):
    """Integral of kernel(y) * F(y) over [a, b], exact per segment.

    F is constant between jumps, so the integral is the sum over constancy
    segments of the F-value times the kernel's antiderivative difference.
    Kernels without an elementary antiderivative (1/log y, y/log y) use
    adaptive quadrature on each segment.  Power kernels with an integral
    exponent keep rational data rational.
    """
    _check_finite_point(a)
    _check_finite_point(b)
    kernel.check_interval(a, b)
    exact = (
        series.is_exact
        and isinstance(a, Rational)
        and isinstance(b, Rational)
        and kernel.tag == "power"
        and _integer_exponent(kernel.exponent) is not None
        and _integer_exponent(kernel.exponent) != -1
    )
    if a == b or len(series) == 0:
        return 0 if exact else 0.0

    if exact:
        # hoist the exponent out of the loop and divide once at the end;
        # plain / on two ints would decay the total to a float
        m = _integer_exponent(kernel.exponent) + 1
        total = 0
        if m == 1:
            for left, right, value in _segments(series, a, b):
                if value:
                    total += value * (right - left)
            return total
        if m > 0:
            # positive powers never leave the rational tower
            for left, right, value in _segments(series, a, b):
                if value:
                    total += value * (right**m - left**m)
        else:
            for left, right, value in _segments(series, a, b):
                if value:
                    total += value * (_rational_pow(right, m) - _rational_pow(left, m))
        if _is_integral(total):
            return Fraction(total, m)
        return total / m

    terms = []
    for left, right, value in _segments(series, a, b):
        if value == 0:
            continue
        diff = _antiderivative_diff(kernel, left, right, False)
        if diff is None:
            diff, _ = quadrature.integrate(
                kernel,
                float(left),
                float(right),
                abs_tol=QUAD_ABS_TOL,
                max_panels=QUAD_MAX_PANELS,
            )
        terms.append(float(value) * diff)
    return math.fsum(terms)


# =====================================================================
# Step plus smooth, and Stieltjes integration
# =====================================================================


class SmoothTerm(Enum):
    NONE = "none"
    NEG_LOG = "neg_log"


@dataclass(frozen=True)
class StepPlusSmooth:
    """A jump series plus a named smooth term (only -log x for now).

    The derivative-as-measure view: the atoms of ``step`` plus, for
    NEG_LOG, the density -1/y.
    """

    step: JumpSeries
    smooth: SmoothTerm = SmoothTerm.NONE

    def value(self, x):
        base = self.step.value(x)
        if self.smooth is SmoothTerm.NONE:
            return base
        fx = float(x)
        if fx <= 0:
            raise DomainError(f"-log x undefined at {x}")
        return float(base) - math.log(fx)


def _density_integral(kernel, a, b):
    """Integral over [a, b] of kernel(y) * (-1/y), the NEG_LOG density part.

    Closed forms exist when kernel(y)/y has an elementary antiderivative:
    power kernels shift the exponent down by one, and 1/log y turns into
    1/(y log y).  The rest goes through adaptive quadrature.
    """
    if kernel.tag == "power":
        shifted = Kernel.power(kernel.exponent - 1)
        return -_antiderivative_diff(shifted, a, b, False)
    if kernel.tag == "inv_log":
        return -_antiderivative_diff(INV_Y_LOG, a, b, False)
    if kernel.tag == "y_over_log":
        product = INV_LOG
    elif kernel.tag == "inv_y_log":
        product = lambda y: 1.0 / (y * y * math.log(y))
    elif kernel.tag == "inv_y_log_sq":
        product = lambda y: 1.0 / (y * y * math.log(y) ** 2)
    else:
        raise DomainError(f"unknown kernel tag {kernel.tag!r}")
    value, _ = quadrature.integrate(
        product, a, b, abs_tol=QUAD_ABS_TOL, max_panels=QUAD_MAX_PANELS
    )
    return -value


def stieltjes_integrate(kernel, measure, a, b):
    """Integral of the kernel against dF over [a, b], endpoints inclusive.

    ``measure`` is a StepPlusSmooth (a bare JumpSeries is accepted and
    treated as having no smooth part).  Atoms with a <= location <= b
    contribute kernel(location) * weight; a NEG_LOG smooth part adds the
    integral of kernel(y) * (-1/y) over [a, b].
    """
    if isinstance(measure, JumpSeries):
        measure = StepPlusSmooth(measure)
    _check_finite_point(a)
    _check_finite_point(b)
    kernel.check_interval(a, b)
    series = measure.step
    locs = series.locations
    i0 = bisect_left(locs, a)
    i1 = bisect_right(locs, b)
    exact = (
        measure.smooth is SmoothTerm.NONE
        and series.is_exact
        and kernel.tag == "power"
        and _integer_exponent(kernel.exponent) is not None
    )
    if exact:
        total = 0
        for i in range(i0, i1):
            total += kernel(locs[i]) * series.weights[i]
        return total
    atom_part = math.fsum(
        float(kernel(float(locs[i]))) * float(series.weights[i]) for i in range(i0, i1)
    )
    if measure.smooth is SmoothTerm.NONE:
        return atom_part
    if a == b:
        return atom_part
    return atom_part + _density_integral(kernel, float(a), float(b))
