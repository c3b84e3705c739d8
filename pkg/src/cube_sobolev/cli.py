"""Command-line front end.

Exit codes: 0 = success / all checks passed; 1 = at least one verification
failure (the report is still written); 2 = usage or domain error (nothing is
written).  Verification commands emit the JSON report schema
{suite, params, seed, checks, violations, wall_time_ms}; table commands emit
CSV with '.' decimal points and ',' separators.  Output is deterministic for
a fixed command line and seed, except for the wall_time_ms field.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import balls, codes, series, suites
from .cube import SolverConfig, Subcube, lambda_star, parse_mask_file
from .report import VerificationReport
from .special import LOG2, Tolerance, c_alpha, c_explicit

THREADS_ENV = "CUBE_SOBOLEV_THREADS"

__all__ = ["build_parser", "dispatch", "run", "main"]


@dataclass
class RunConfig:
    """Validated invocation: command route plus the common knobs."""

    command: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    out: Optional[str] = None
    fmt: str = "json"
    threads: int = 0  # 0 = auto; present for compatibility, execution is serial
    tol: Tolerance = Tolerance()


def _fmt_num(x: float) -> str:
    if math.isfinite(x) and x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_report(report: VerificationReport, cfg: RunConfig) -> int:
    _write(report.to_json(), cfg.out)
    if cfg.out is not None:
        print(f"{report.summary()} -> {cfg.out}")
    return 0 if report.violations == 0 else 1


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------


def _cmd_cfun(args: argparse.Namespace, cfg: RunConfig) -> int:
    start, end, step = args.start, args.end, args.step
    if not (0.0 <= start <= end <= LOG2 + 1e-15):
        return _usage_error(f"need 0 <= start <= end <= log 2, got [{start}, {end}]")
    if step <= 0.0:
        return _usage_error(f"step must be positive, got {step}")
    rows = []
    worst = 0.0
    i = 0
    while True:
        rho = start + i * step
        if rho > end + 1e-12:
            break
        rho = min(rho, LOG2)
        ce = c_explicit(rho, cfg.tol)
        ca = c_alpha(rho, cfg.tol)
        diff = abs(ce - ca)
        worst = max(worst, diff)
        rows.append(f"{_fmt_num(rho)},{_fmt_num(ce)},{_fmt_num(ca)},{_fmt_num(diff)}")
        i += 1
    text = "rho,C_explicit,C_alpha,abs_diff\n" + "\n".join(rows) + "\n"
    _write(text, cfg.out)
    # postcondition: the two routes agree to 1e-9 on every row
    return 0 if worst <= 1e-9 else 1


def _cmd_lambda_star(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        if args.shape == "ball":
            value = balls.ball_lambda_star(args.n, args.r)
            if args.emit_minimizer:
                profile = balls.ball_minimizer(args.n, args.r)
                lines = ["k,g_k"] + [
                    f"{k},{g!r}" for k, g in enumerate(profile.g.tolist())
                ]
                _write("\n".join(lines) + "\n", args.emit_minimizer)
        elif args.shape == "subcube":
            value = lambda_star(
                Subcube(args.n, args.t), SolverConfig(compute_minimizer=False)
            ).lambda_star
        else:
            mask = parse_mask_file(args.file)
            if mask.size() == 0:
                return _usage_error("mask file contains no vertices")
            value = lambda_star(mask, SolverConfig(compute_minimizer=False)).lambda_star
    except (ValueError, OSError) as exc:
        return _usage_error(str(exc))
    print(repr(round(value, 12)))
    return 0


def _inequality_verify(check: str, args: argparse.Namespace, cfg: RunConfig) -> int:
    kinds = suites.KINDS if args.kinds is None else tuple(args.kinds.split(","))
    try:
        t0 = time.perf_counter()
        report = suites.run_inequality_suite(
            check,
            n_min=args.n_min,
            n_max=args.n_max,
            count=args.count,
            seed=cfg.seed,
            kinds=kinds,
            tol=cfg.tol,
            include_passes=not args.failures_only,
        )
        report.wall_time_ms = (time.perf_counter() - t0) * 1000.0
    except ValueError as exc:
        return _usage_error(str(exc))
    return _emit_report(report, cfg)


def _cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    suite = args.suite
    if suite in suites.CHECKS:
        return _inequality_verify(suite, args, cfg)
    try:
        t0 = time.perf_counter()
        if suite == "series":
            report = series.verify_coefficient_properties(args.kmax)
        elif suite == "hprop":
            report = series.verify_hprop_series(args.kmax)
        elif suite == "fk-scan":
            report = suites.scan_all_subsets(args.n).report
        else:  # tightness
            n_list = [int(v) for v in args.n_list.split(",") if v]
            report = suites.tightness_sweep(n_list, args.ratio)
        report.wall_time_ms = (time.perf_counter() - t0) * 1000.0
        report.seed = cfg.seed
    except ValueError as exc:
        return _usage_error(str(exc))
    return _emit_report(report, cfg)


def _cmd_scan_extremal(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        result = suites.scan_all_subsets(args.n)
    except ValueError as exc:
        return _usage_error(str(exc))
    _write(suites.extremal_table_csv(result.table), cfg.out)
    return 0 if result.report.violations == 0 else 1


def _cmd_code_bound(args: argparse.Namespace, cfg: RunConfig) -> int:
    import json

    if args.asymptotic:
        if args.delta_grid is None:
            return _usage_error("--asymptotic requires --delta-grid start:end:step")
        try:
            start_s, end_s, step_s = args.delta_grid.split(":")
            start, end, step = float(start_s), float(end_s), float(step_s)
        except ValueError:
            return _usage_error(f"bad --delta-grid {args.delta_grid!r}")
        if not (0.0 < start <= end < 0.5) or step <= 0.0:
            return _usage_error("need 0 < start <= end < 1/2 and step > 0")
        rows = ["delta,rate_bound_bits"]
        i = 0
        while True:
            delta = start + i * step
            if delta > end + 1e-12:
                break
            rows.append(f"{_fmt_num(delta)},{_fmt_num(codes.asymptotic_rate_bound(delta))}")
            i += 1
        _write("\n".join(rows) + "\n", cfg.out)
        return 0
    if args.n is None or args.d is None:
        return _usage_error("code-bound needs --n and --d (or --asymptotic)")
    try:
        result = codes.code_size_bound(args.n, args.d)
    except ValueError as exc:
        return _usage_error(str(exc))
    _write(json.dumps(result.to_dict(), indent=2), cfg.out)
    return 0


# ---------------------------------------------------------------------------
# parser and dispatch
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="RNG seed recorded in reports")
    p.add_argument("--out", type=str, default=None, help="output path (default stdout)")
    p.add_argument(
        "--abs-tol", type=float, default=1e-12, help="bisection residual tolerance"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cube-sobolev",
        description=(
            "Entropy-dependent log-Sobolev constants, fundamental tones and "
            "fractional edge boundaries on the Hamming cube, exact series "
            "checks, and coding bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cfun", help="table of the constant function, both routes")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--end", type=float, default=LOG2)
    p.add_argument("--step", type=float, default=1e-4)
    _add_common(p)

    p = sub.add_parser("lambda-star", help="fundamental tone of one subset")
    shapes = p.add_subparsers(dest="shape", required=True)
    pb = shapes.add_parser("ball", help="Hamming ball, radial reduction (large n ok)")
    pb.add_argument("--n", type=int, required=True)
    pb.add_argument("--r", type=int, required=True)
    pb.add_argument(
        "--emit-minimizer", type=str, default=None, help="write weight profile CSV here"
    )
    _add_common(pb)
    ps = shapes.add_parser("subcube", help="subcube of codimension t (n <= 24)")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--t", type=int, required=True)
    _add_common(ps)
    pm = shapes.add_parser("mask", help="explicit vertex list from a mask file")
    pm.add_argument("--file", type=str, required=True)
    _add_common(pm)

    p = sub.add_parser("verify", help="run a verification suite, emit JSON report")
    vsub = p.add_subparsers(dest="suite", required=True)
    for name, desc in (
        ("logsob", "entropy-dependent variation lower bound"),
        ("tech", "variation vs 4 k2 phi(Ent/k2)"),
        ("entk", "Ent(f^2) <= 2 log 2 k2(f)"),
        ("isop", "functional isoperimetric inequalities"),
    ):
        pv = vsub.add_parser(name, help=desc)
        pv.add_argument("--n-min", type=int, default=1)
        pv.add_argument("--n-max", type=int, default=10)
        pv.add_argument("--count", type=int, default=1000)
        pv.add_argument("--kinds", type=str, default=None, help="comma list of generator kinds")
        pv.add_argument(
            "--failures-only",
            action="store_true",
            help="keep only failing/skipped records in the report",
        )
        _add_common(pv)
    pv = vsub.add_parser("series", help="exact coefficient properties of F and G")
    pv.add_argument("--kmax", type=int, default=60)
    _add_common(pv)
    pv = vsub.add_parser("hprop", help="exact nonnegativity of the curvature series")
    pv.add_argument("--kmax", type=int, default=200)
    _add_common(pv)
    pv = vsub.add_parser("fk-scan", help="isoperimetric check on every subset (n <= 4)")
    pv.add_argument("--n", type=int, default=4)
    _add_common(pv)
    pv = vsub.add_parser("tightness", help="ball tone vs lower bound, gap trend")
    pv.add_argument("--n-list", type=str, default="500,1000,2000,4000")
    pv.add_argument("--ratio", type=float, default=0.11)
    _add_common(pv)

    p = sub.add_parser("code-bound", help="code-size bound from small-tone balls")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--asymptotic", action="store_true")
    p.add_argument("--delta-grid", type=str, default=None, help="start:end:step")
    _add_common(p)

    p = sub.add_parser("scan-extremal", help="per-cardinality extremal table (n <= 4)")
    p.add_argument("--n", type=int, default=4)
    _add_common(p)

    return parser


def dispatch(args: argparse.Namespace, cfg: RunConfig) -> int:
    if cfg.command == "cfun":
        return _cmd_cfun(args, cfg)
    if cfg.command == "lambda-star":
        return _cmd_lambda_star(args, cfg)
    if cfg.command == "verify":
        return _cmd_verify(args, cfg)
    if cfg.command == "code-bound":
        return _cmd_code_bound(args, cfg)
    if cfg.command == "scan-extremal":
        return _cmd_scan_extremal(args, cfg)
    return _usage_error(f"unknown command {cfg.command!r}")


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    threads_raw = os.environ.get(THREADS_ENV, "0")
    try:
        threads = int(threads_raw)
        if threads < 0:
            raise ValueError
    except ValueError:
        return _usage_error(f"{THREADS_ENV} must be a nonnegative integer, got {threads_raw!r}")
    try:
        tol = Tolerance(abs_tol=getattr(args, "abs_tol", 1e-12))
    except ValueError as exc:
        return _usage_error(str(exc))
    cfg = RunConfig(
        command=args.command,
        params={k: v for k, v in vars(args).items() if k != "command"},
        seed=getattr(args, "seed", 0),
        out=getattr(args, "out", None),
        threads=threads,
        tol=tol,
    )
    return dispatch(args, cfg)


def main() -> None:
    sys.exit(run())
