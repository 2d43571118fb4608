"""Command-line front end.

    genus2 --p 7 --f [1,0,0,0,0,1] add "u=[0,6,1];v=[1,2]" "u=[2,3,1];v=[5,5]"
    genus2 --p 7 --f [1,0,0,0,0,1] verify
    genus2 bench --iterations 100
    genus2 figure 2 doubling.svg

Exit codes: 0 success, 1 usage error, 2 verification failure.  All
randomness flows from --seed, so every command is reproducible.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Optional

from . import figures, group, mumford, poly
from .counters import OpCounters
from .curve import Curve, ENUMERATION_BOUND, load_curve_file, random_curve, validate_curve
from .explicit import add_classified, double as explicit_double
from .field import PrimeField
from .group import run_benchmark, oracle_sweep, scalar_mul
from .mumford import MumfordDivisor, format_divisor, parse_divisor, to_json_dict

# M127: the default modulus for benchmarks
DEFAULT_BENCH_PRIME = 2**127 - 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class SessionConfig:
    curve: Optional[Curve]
    seed: int
    bound: int
    json_out: bool


def build_parser() -> _Parser:
    parser = _Parser(prog="genus2", description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=str, default=None, help="prime modulus (decimal)")
    parser.add_argument("--f", type=str, default=None,
                        help="curve coefficients, ascending: [c0,...,c5]")
    parser.add_argument("--curve", type=str, default=None,
                        help="curve file with p=... and f=[...] lines")
    parser.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    parser.add_argument("--bound", type=int, default=ENUMERATION_BOUND,
                        help="enumeration bound on p for exhaustive commands")
    parser.add_argument("--json", action="store_true", dest="json_out",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_add = sub.add_parser("add", help="add two divisors")
    p_add.add_argument("d1", help="divisor, u=[...];v=[...]")
    p_add.add_argument("d2", help="divisor, u=[...];v=[...]")

    p_double = sub.add_parser("double", help="double a divisor")
    p_double.add_argument("d", help="divisor, u=[...];v=[...]")

    p_mul = sub.add_parser("mul", help="scalar-multiply a divisor")
    p_mul.add_argument("n", type=int, help="non-negative scalar")
    p_mul.add_argument("d", help="divisor, u=[...];v=[...]")

    sub.add_parser("verify", help="exhaustive explicit-vs-oracle sweep")

    p_bench = sub.add_parser("bench", help="per-case op counts and timings")
    p_bench.add_argument("--iterations", type=int, default=100,
                         help="additions per case row (default 100)")

    p_fig = sub.add_parser("figure", help="render a construction sketch as SVG")
    p_fig.add_argument("case", type=int, choices=(1, 2, 3), help="construction case")
    p_fig.add_argument("out", help="output SVG path")

    return parser


def _load_session(args) -> SessionConfig:
    curve = None
    if args.curve is not None:
        if args.p is not None or args.f is not None:
            raise UsageError("--curve excludes --p/--f")
        curve = load_curve_file(args.curve)
    elif args.p is not None or args.f is not None:
        if args.p is None or args.f is None:
            raise UsageError("--p and --f must be given together")
        field = PrimeField(int(args.p, 10))
        curve = validate_curve(poly.parse_coeffs(field, args.f))
    return SessionConfig(curve=curve, seed=args.seed, bound=args.bound,
                         json_out=args.json_out)


def _require_curve(session: SessionConfig) -> Curve:
    if session.curve is None:
        raise UsageError("this command needs a curve: --p and --f (or --curve FILE)")
    return session.curve


def _print_divisor_result(session, result: MumfordDivisor, case: str,
                          counters: OpCounters) -> None:
    if session.json_out:
        payload = to_json_dict(result)
        payload["case"] = case
        payload["counts"] = {"field_mults": counters.field_mults,
                             "field_invs": counters.field_invs}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"result: {format_divisor(result)}")
        print(f"case: {case}")
        print(f"field mults: {counters.field_mults}  invs: {counters.field_invs}")


def cmd_add(session: SessionConfig, d1_text: str, d2_text: str) -> int:
    curve = _require_curve(session)
    d1 = parse_divisor(curve.field, d1_text)
    d2 = parse_divisor(curve.field, d2_text)
    for d in (d1, d2):
        if not mumford.validate(curve, d):
            raise UsageError(f"not a divisor on this curve: {format_divisor(d)}")
    counters = OpCounters()
    result, cls = add_classified(curve, d1, d2, counters)
    _print_divisor_result(session, result, cls.case.value, counters)
    return 0


def cmd_double(session: SessionConfig, d_text: str) -> int:
    curve = _require_curve(session)
    d = parse_divisor(curve.field, d_text)
    if not mumford.validate(curve, d):
        raise UsageError(f"not a divisor on this curve: {format_divisor(d)}")
    counters = OpCounters()
    result, cls = add_classified(curve, d, d, counters)
    _print_divisor_result(session, result, cls.case.value, counters)
    return 0


def cmd_mul(session: SessionConfig, n: int, d_text: str) -> int:
    curve = _require_curve(session)
    if n < 0:
        raise UsageError("scalar must be non-negative")
    d = parse_divisor(curve.field, d_text)
    if not mumford.validate(curve, d):
        raise UsageError(f"not a divisor on this curve: {format_divisor(d)}")
    counters = OpCounters()
    result = scalar_mul(curve, n, d, counters)
    _print_divisor_result(session, result, "double-and-add", counters)
    return 0


def cmd_verify(session: SessionConfig) -> int:
    curve = _require_curve(session)
    if curve.field.p >= session.bound:
        raise UsageError(
            f"exhaustive verification needs p < {session.bound}; "
            f"p = {curve.field.p} is out of range"
        )
    report = oracle_sweep(curve, bound=session.bound)
    histogram = report.case_histogram()
    if session.json_out:
        print(json.dumps({
            "p": report.p,
            "f": list(report.f_coeffs),
            "jacobian_size": report.jacobian_size,
            "pairs_checked": report.pairs_checked,
            "mismatches": len(report.mismatches),
            "identity_failures": len(report.identity_failures),
            "case_tally": histogram,
        }, sort_keys=True))
    else:
        print(f"p={report.p} f=[{','.join(str(c) for c in report.f_coeffs)}]")
        print(f"jacobian size: {report.jacobian_size}")
        print(f"pairs checked: {report.pairs_checked}")
        print(f"mismatches: {len(report.mismatches)}")
        print(f"interpolation identity failures: {len(report.identity_failures)}")
        print("case histogram: "
              + " ".join(f"{k}={v}" for k, v in histogram.items()))
    if not report.ok:
        for d1, d2, case, got, expected in report.mismatches[:5]:
            print(f"MISMATCH [{case}] {d1} + {d2}: got {got}, oracle {expected}",
                  file=sys.stderr)
        return 2
    return 0


def cmd_bench(session: SessionConfig, iterations: int) -> int:
    if iterations < 1:
        raise UsageError("--iterations must be positive")
    rng = random.Random(session.seed)
    if session.curve is not None:
        curve = session.curve
    else:
        curve = random_curve(PrimeField(DEFAULT_BENCH_PRIME), rng)
    report = run_benchmark(curve, iterations, rng)
    if session.json_out:
        print(json.dumps({
            "p": report.p,
            "f": list(report.f_coeffs),
            "iterations": report.iterations,
            "rows": [{
                "label": r.label,
                "adds": r.adds,
                "field_mults": r.field_mults,
                "field_invs": r.field_invs,
                "mean_field_mults": r.mults_per_add,
                "mean_field_invs": r.invs_per_add,
                "seconds": r.seconds,
                "cross_mismatches": r.cross_mismatches,
            } for r in report.rows],
            "total_mismatches": report.total_mismatches,
        }, sort_keys=True))
    else:
        print(f"p={report.p}")
        print(f"f=[{','.join(str(c) for c in report.f_coeffs)}]")
        print(f"additions per row: {report.iterations}")
        print(f"{'row':<10}{'adds':>6}{'mults/add':>12}{'invs/add':>10}{'us/add':>10}")
        for r in report.rows:
            print(f"{r.label:<10}{r.adds:>6}{r.mults_per_add:>12.1f}"
                  f"{r.invs_per_add:>10.2f}{r.seconds / r.adds * 1e6:>10.1f}")
        print(f"cross-check mismatches: {report.total_mismatches}")
    return 2 if report.total_mismatches else 0


def cmd_figure(session: SessionConfig, case: int, out: str) -> int:
    data = figures.write_figure(case, out)
    if session.json_out:
        print(json.dumps({
            "case": case,
            "path": out,
            "max_vertical_residual": data.max_vertical_residual(),
            "max_slope_residual": data.max_slope_residual(),
        }, sort_keys=True))
    else:
        print(f"wrote case-{case} sketch to {out}")
        print(f"max vertical residual: {data.max_vertical_residual():.3e}")
        if data.tangency_points:
            print(f"max tangent slope residual: {data.max_slope_residual():.3e}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required (add, double, mul, verify, bench, figure)")
        session = _load_session(args)
        if args.command == "add":
            return cmd_add(session, args.d1, args.d2)
        if args.command == "double":
            return cmd_double(session, args.d)
        if args.command == "mul":
            return cmd_mul(session, args.n, args.d)
        if args.command == "verify":
            return cmd_verify(session)
        if args.command == "bench":
            return cmd_bench(session, args.iterations)
        if args.command == "figure":
            return cmd_figure(session, args.case, args.out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
