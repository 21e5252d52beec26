"""Command line interface.

Subcommands reproduce the study's datasets as CSV/TSV/JSON: the
30-series table (table1), h versus paper count curves (hcurve), indicator
scatters (scatter), regressions (fit), single-spec simulation summaries
(simulate), and the verification suite (verify). All output is
deterministic for fixed flags; seeds are echoed on stderr.
"""

from __future__ import annotations

import argparse
import sys

from .indicators import Y_INDICATORS
from .montecarlo import DEFAULT_SEED
from .output import KINDS, OutputFormat, render_rows
from .report import (
    CLI_THRESHOLDS,
    FIT_X_AXES,
    SCATTER_X_AXES,
    fit_rows,
    hcurve_rows,
    scatter_rows,
    simulate_rows,
    table1_rows,
)
from .verification import run_checks


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citesim",
        description="Lognormal citation model: study tables, h-index curves, fits, and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table1 = sub.add_parser("table1", help="emit the 30-series study table")
    table1.add_argument("--mode", choices=("analytic", "simulate"), default="analytic")
    table1.add_argument("--replicates", type=int, default=10_000)
    table1.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_output_flags(table1)

    hcurve = sub.add_parser("hcurve", help="emit h versus paper count over a geometric grid")
    hcurve.add_argument("--mu", type=float, required=True)
    hcurve.add_argument("--sigma", type=float, required=True)
    hcurve.add_argument("--n-min", type=int, default=10)
    hcurve.add_argument("--n-max", type=int, default=10_000)
    hcurve.add_argument("--points", type=int, default=50)
    hcurve.add_argument("--with-asymptotic", action="store_true")
    _add_output_flags(hcurve)

    scatter = sub.add_parser("scatter", help="emit per-series (x, y) indicator points")
    scatter.add_argument("--y", choices=Y_INDICATORS, required=True)
    scatter.add_argument("--x", choices=SCATTER_X_AXES, default="counts")
    scatter.add_argument("--threshold", type=float, choices=CLI_THRESHOLDS, required=True)
    scatter.add_argument("--normalized", action="store_true",
                         help="divide both axes by the paper count")
    _add_output_flags(scatter)

    fit = sub.add_parser("fit", help="regress one indicator on another over the study")
    fit.add_argument("--kind", choices=("power", "linear"), required=True)
    fit.add_argument("--y", choices=Y_INDICATORS, required=True)
    fit.add_argument("--x", choices=FIT_X_AXES, required=True)
    fit.add_argument("--threshold", type=float, choices=CLI_THRESHOLDS)
    _add_output_flags(fit, default_format=None)

    simulate = sub.add_parser("simulate", help="replicate-averaged summary for one spec")
    simulate.add_argument("--mu", type=float, required=True)
    simulate.add_argument("--sigma", type=float, required=True)
    simulate.add_argument("--n", type=int, required=True)
    simulate.add_argument("--replicates", type=int, default=10_000)
    simulate.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_output_flags(simulate)

    verify = sub.add_parser("verify", help="run the verification suite")
    verify.add_argument("--filter", default=None, help="only run checks whose name contains this")
    verify.add_argument("--replicates", type=int, default=10_000)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_output_flags(verify, default_format=None)

    return parser


def _add_output_flags(sub: argparse.ArgumentParser, default_format: str | None = "csv") -> None:
    sub.add_argument("--format", choices=KINDS, default=default_format)
    sub.add_argument("--out", metavar="FILE", default=None)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "table1":
        fmt = _fmt(args, "csv")
        if args.mode == "simulate":
            _echo_seed(args)
        rows = table1_rows(args.mode, args.replicates, args.seed, fmt)
        _emit(render_rows(rows, fmt), args.out)
        return 0

    if args.command == "hcurve":
        fmt = _fmt(args, "csv")
        rows = hcurve_rows(args.mu, args.sigma, args.n_min, args.n_max,
                           args.points, args.with_asymptotic)
        _emit(render_rows(rows, fmt), args.out)
        return 0

    if args.command == "scatter":
        fmt = _fmt(args, "csv")
        rows = scatter_rows(args.y, args.x, args.threshold, args.normalized)
        _emit(render_rows(rows, fmt), args.out)
        return 0

    if args.command == "fit":
        rows = fit_rows(args.kind, args.y, args.x, args.threshold)
        if args.format is None:
            _emit(_key_value_text(rows[0]), args.out)
        else:
            _emit(render_rows(rows, _fmt(args, "csv")), args.out)
        return 0

    if args.command == "simulate":
        fmt = _fmt(args, "csv")
        _echo_seed(args)
        rows = simulate_rows(args.mu, args.sigma, args.n, args.replicates, args.seed)
        _emit(render_rows(rows, fmt), args.out)
        return 0

    # verify
    _echo_seed(args)
    results = run_checks(args.filter, args.replicates, args.seed)
    if not results:
        print(f"error: no checks match filter {args.filter!r}", file=sys.stderr)
        return 1
    if args.format is None:
        lines = [
            f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}" for r in results
        ]
        failed = sum(not r.passed for r in results)
        lines.append(f"{len(results)} checks, {len(results) - failed} passed, {failed} failed")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        rows = [
            {"name": r.name, "status": "pass" if r.passed else "fail", "detail": r.detail}
            for r in results
        ]
        _emit(render_rows(rows, _fmt(args, "csv")), args.out)
    return 0 if all(r.passed for r in results) else 1


def _fmt(args: argparse.Namespace, fallback: str) -> OutputFormat:
    return OutputFormat(kind=args.format or fallback)


def _echo_seed(args: argparse.Namespace) -> None:
    print(
        f"# command={args.command} seed={args.seed} replicates={args.replicates}",
        file=sys.stderr,
    )


def _key_value_text(row: dict) -> str:
    return "".join(f"{key} = {value}\n" for key, value in row.items())


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


if __name__ == "__main__":
    raise SystemExit(main())
