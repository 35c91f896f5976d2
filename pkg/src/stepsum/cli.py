"""Command line interface.

Four subcommands: primes (sieve listing), compute (one value by one
method), verify (sweep an identity against its oracle, optionally writing
CSV), bench (time the harmonic routes).  Exit codes: 0 success / all pass,
1 verification failure, 2 usage error, 3 range or resource error.
"""

import argparse
import csv
import math
import statistics
import sys
import time
from dataclasses import dataclass
from numbers import Rational

import numpy as np

from . import analytic, identities, verify
from .errors import (
    ConfigurationError,
    DomainError,
    PanelBudgetError,
    RangeError,
    ResourceError,
)
from .primes import sieve
from .report import IdentityId

__all__ = ["main", "build_parser", "BenchReport", "run_bench", "write_csv"]

CSV_HEADER = ["identity", "x", "k", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass"]

# which computation methods exist per function; the first is the default
_METHODS = {
    "harmonic": ("direct", "identity"),
    "hp": ("direct", "prime_sums", "from_pi", "mertens"),
    "pi": ("direct", "identity", "li"),
    "prime_sum": ("direct", "identity"),
    "li2": ("direct",),
    "r": ("direct",),
    "mertens": ("direct",),
}

_FLOAT_ONLY_METHODS = {("hp", "mertens"), ("pi", "li"), ("li2", "direct"),
                       ("r", "direct"), ("mertens", "direct")}

_NEEDS_TABLE = {"hp", "pi", "prime_sum", "r", "mertens"}

_NATURALS_IDS = {IdentityId.HARMONIC, IdentityId.FLOOR, IdentityId.TRIANGULAR}
_SET_IDS = {IdentityId.COUNT, IdentityId.POWER_SUM, IdentityId.RECIPROCAL_POWER_SUM}


def _fmt(value):
    """Render a number: 17 significant digits for floats, num/den for rationals."""
    if isinstance(value, Rational):
        num, den = value.numerator, value.denominator
        return str(num) if den == 1 else f"{num}/{den}"
    return f"{float(value):.17g}"


def _fmt_float(value):
    return f"{float(value):.17g}"


# =====================================================================
# compute
# =====================================================================


def _compute_value(function, method, x, exact, limit):
    table = None
    if function in _NEEDS_TABLE:
        table = sieve(limit if limit is not None else max(2, math.ceil(x)))
    if function == "harmonic":
        if method == "direct":
            return identities.harmonic_direct(x, exact=exact)
        return identities.harmonic_via_identity(x, exact=exact)
    if function == "hp":
        if method == "direct":
            return table.reciprocal_sum(x, exact=exact)
        if method == "prime_sums":
            return identities.prime_reciprocal_sum_via_prime_sums(table, x, exact=exact)
        if method == "from_pi":
            return identities.prime_reciprocal_sum_via_pi(table, x, exact=exact)
        return analytic.prime_reciprocal_sum_via_mertens(table, x)
    if function == "pi":
        if method == "direct":
            return table.pi(x)
        if method == "identity":
            return identities.prime_count_via_identity(table, x, exact=exact)
        return analytic.prime_count_via_li(table, x)
    if function == "prime_sum":
        if method == "direct":
            return table.prime_power_sum(x, 1)
        return identities.prime_sum_via_identity(table, x, exact=exact)
    if function == "li2":
        return analytic.li_from_2(x).value
    if function == "r":
        return analytic.mertens_remainder(table, x)
    return analytic.prime_reciprocal_sum_via_mertens(table, x)


def command_compute(args):
    function = args.function
    methods = _METHODS[function]
    method = args.method if args.method is not None else methods[0]
    if method not in methods:
        raise ConfigurationError(
            f"function {function} supports methods {', '.join(methods)}; got {method}"
        )
    if args.exact and (function, method) in _FLOAT_ONLY_METHODS:
        raise ConfigurationError(f"{function} {method} has no exact mode")
    value = _compute_value(function, method, args.x, args.exact, args.limit)
    print(f"{function} {method} {_fmt_float(args.x)} {_fmt(value)}")
    return 0


# =====================================================================
# primes
# =====================================================================


def command_primes(args):
    if args.limit < 2:
        raise ConfigurationError(f"--limit must be at least 2, got {args.limit}")
    table = sieve(args.limit)
    out = sys.stdout
    for p in table.primes.tolist():
        out.write(f"{p}\n")
    out.write(f"# pi({args.limit})={len(table.primes)}\n")
    return 0


# =====================================================================
# verify
# =====================================================================


def write_csv(path, reports):
    """Write reports with the fixed header; floats at 17 significant digits."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in reports:
            writer.writerow(
                [
                    r.identity.value,
                    _fmt_float(r.x),
                    "" if r.k is None else _fmt_float(r.k),
                    _fmt_float(r.lhs),
                    _fmt_float(r.rhs),
                    _fmt_float(r.abs_err),
                    _fmt_float(r.rel_err),
                    _fmt_float(r.tol),
                    "true" if r.passed else "false",
                ]
            )


def _sample_grid(identity, xmax, samples, table):
    """Log-spaced samples plus every atom below min(xmax, 100)."""
    lower = 1.0 if identity in _NATURALS_IDS else 2.0
    grid = [float(v) for v in np.geomspace(lower, xmax, samples)]
    atom_cut = min(xmax, 100.0)
    if identity in _NATURALS_IDS:
        grid.extend(float(i) for i in range(1, math.floor(atom_cut) + 1))
    else:
        grid.extend(float(p) for p in table.primes_leq(atom_cut).tolist())
    return grid


def command_verify(args):
    identity = IdentityId(args.identity)
    if args.samples < 1:
        raise ConfigurationError(f"--samples must be at least 1, got {args.samples}")
    if identity in _SET_IDS:
        reports = verify.random_set_sweep(
            args.seed, args.samples, tol=args.tol, jobs=args.jobs
        )
    elif identity is IdentityId.HP_INCREMENT:
        if args.xmax <= 2.0:
            raise ConfigurationError(f"--xmax must exceed 2, got {args.xmax}")
        table = sieve(max(2, math.ceil(args.xmax)))
        intervals = verify.random_intervals(args.seed, args.samples, hi=args.xmax)
        reports = verify.increment_sweep(
            table, intervals, tol=args.tol, jobs=args.jobs
        )
    else:
        lower = 1.0 if identity in _NATURALS_IDS else 2.0
        if args.xmax < lower:
            raise ConfigurationError(
                f"--xmax must be at least {lower} for {identity.value}"
            )
        table = None
        if identity not in _NATURALS_IDS:
            table = sieve(max(2, math.ceil(args.xmax)))
        grid = _sample_grid(identity, args.xmax, args.samples, table)
        reports = verify.run_sweep(
            identity, table, grid, tol=args.tol, jobs=args.jobs
        )
    if args.csv:
        write_csv(args.csv, reports)
    passed = sum(1 for r in reports if r.passed)
    for r in reports:
        if not r.passed:
            where = f"x={_fmt_float(r.x)}"
            if r.k is not None:
                where += f" k={_fmt_float(r.k)}"
            print(
                f"FAIL {r.identity.value} {where} lhs={_fmt_float(r.lhs)} "
                f"rhs={_fmt_float(r.rhs)} abs_err={_fmt_float(r.abs_err)}"
            )
    print(f"{identity.value}: {passed}/{len(reports)} pass")
    return 0 if passed == len(reports) else 1


# =====================================================================
# bench
# =====================================================================


@dataclass(frozen=True)
class BenchReport:
    op: str
    method: str
    x: float
    reps: int
    median_ns: int
    result: float


def _naive_harmonic(n):
    total = 0.0
    for i in range(1, n + 1):
        total += 1.0 / i
    return total


def run_bench(x, reps):
    """Time the three harmonic routes; one warm-up call each is discarded."""
    if reps < 3:
        raise ConfigurationError(f"reps must be at least 3, got {reps}")
    n = math.floor(x)
    if n < 1:
        raise DomainError(f"bench argument must be at least 1, got {x}")
    routes = [
        ("direct", lambda: _naive_harmonic(n)),
        ("direct_compensated", lambda: identities.harmonic_direct(x)),
        ("identity", lambda: identities.harmonic_via_identity(x)),
    ]
    rows = []
    for method, fn in routes:
        fn()
        times = []
        result = None
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            result = fn()
            times.append(time.perf_counter_ns() - t0)
        rows.append(
            BenchReport(
                op="harmonic",
                method=method,
                x=float(x),
                reps=reps,
                median_ns=int(statistics.median(times)),
                result=result,
            )
        )
    return rows


def command_bench(args):
    rows = run_bench(args.x, args.reps)
    print("op,method,x,reps,median_ns,result")
    for row in rows:
        print(
            f"{row.op},{row.method},{_fmt_float(row.x)},{row.reps},"
            f"{row.median_ns},{_fmt_float(row.result)}"
        )
    by_method = {row.method: row.result for row in rows}
    gap = abs(by_method["identity"] - by_method["direct_compensated"])
    print(f"# |identity - direct_compensated| = {_fmt_float(gap)}")
    return 0


# =====================================================================
# parser and entry point
# =====================================================================


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stepsum",
        description="Summatory identities for step functions over the "
        "naturals and the primes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", help="list primes up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=command_primes)

    p = sub.add_parser("compute", help="compute one value by one method")
    p.add_argument("function", choices=sorted(_METHODS))
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--method", default=None)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--limit", type=int, default=None, help="sieve limit override")
    p.set_defaults(func=command_compute)

    p = sub.add_parser("verify", help="sweep an identity against its oracle")
    p.add_argument(
        "--identity", required=True, choices=[i.value for i in IdentityId]
    )
    p.add_argument("--xmax", type=float, default=1000.0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--csv", default=None, help="write all reports to this path")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=command_verify)

    p = sub.add_parser("bench", help="time the harmonic routes")
    p.add_argument("--op", choices=["harmonic"], required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--reps", type=int, required=True)
    p.set_defaults(func=command_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, RangeError, ResourceError, PanelBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
