"""Command-line front end: ``solve``, ``verify``, ``sweep`` and ``cutoffs``.

Exit codes: 0 ok / equilibrium, 1 usage or I/O error, 2 budget on the
regime boundary, 3 not an equilibrium, 4 internal self-check failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys

from . import welfare as W
from .errors import DomainError, GridAlignmentError, GridCapacityError, OracleError, RegimeBoundaryError
from .informed import (
    BEST_CASE,
    WORST_CASE,
    InformedProfile,
    equilibrium_informed,
    is_equilibrium_informed,
    is_small_budget,
    outcome,
)
from .intervals import IntervalSet
from .sweep import CURVES, SweepConfig, render_csv, render_svg, self_check, sweep_rows
from .uninformed import (
    UninformedProfile,
    equilibrium_uninformed,
    equilibrium_uninformed_ext,
    outcome_uninformed,
    outcome_uninformed_ext,
)
from .verifier import verify_equilibrium_grid, verify_uninformed_grid
from .voters import ModelParams, regime_boundary

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUNDARY = 2
EXIT_NOT_EQUILIBRIUM = 3
EXIT_SELF_CHECK = 4

MODES = ("informed", "uninformed", "uninformed-ext")
CUTOFF_AGREEMENT = 1e-8

log = logging.getLogger("targeting")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if abs(x) < 1e-15:
        x = 0.0
    return f"{x:.9g}"


def _alphas(text: str) -> list[float]:
    try:
        return [float(a) for a in text.split(",") if a.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad alpha list {text!r}") from exc


def _emit(fields: dict, fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields.keys())
        writer.writerow([_fmt(v) for v in fields.values()])
    else:
        for key, value in fields.items():
            out.write(f"{key}: {_fmt(value)}\n")


def _regime_label(params):
    return "small_budget" if params.budget_v < regime_boundary(params.alpha) else "large_budget"


def cmd_solve(args, out=None) -> int:
    out = out or sys.stdout
    params = ModelParams(args.alpha, args.v)
    if args.mode == "informed":
        placement = WORST_CASE if args.placement == "worst" else BEST_CASE
        prof = equilibrium_informed(params, placement)
        res = outcome(prof)
        fields = {
            "mode": args.mode,
            "alpha": params.alpha,
            "v": params.budget_v,
            "regime": "small_budget" if is_small_budget(params) else "large_budget",
            "placement": args.placement,
            "S_I": prof.S_I.format(),
            "S_C": prof.S_C.format(),
            "incumbent_share": res.incumbent_share,
            "winner": res.winner.value,
            "payoff_I": res.payoff_I,
            "payoff_C": res.payoff_C,
        }
    else:
        if args.mode == "uninformed":
            prof = equilibrium_uninformed(params)
            res = outcome_uninformed(prof)
        else:
            prof = equilibrium_uninformed_ext(params)
            res = outcome_uninformed_ext(prof)
        fields = {
            "mode": args.mode,
            "alpha": params.alpha,
            "v": params.budget_v,
            "regime": _regime_label(params),
            "s_I": prof.s_I,
            "s_C": prof.s_C,
            "incumbent_share": res.incumbent_share,
            "winner": res.winner.value,
            "payoff_I": res.payoff_I,
            "payoff_C": res.payoff_C,
        }
        if res.indifferent_voter is not None:
            fields["indifferent_voter"] = res.indifferent_voter
    _emit(fields, args.format, out)
    return EXIT_OK


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    params = ModelParams(args.alpha, args.v)
    if args.si is None or args.sc is None:
        raise DomainError("verify needs both --si and --sc")
    if args.mode == "informed":
        prof = InformedProfile(IntervalSet.parse(args.si), IntervalSet.parse(args.sc), params)
        analytic = is_equilibrium_informed(prof)
        grid = verify_equilibrium_grid(prof, n_left=args.grid_left, n_right=args.grid_right)
        out.write("[analytic]\n" + analytic.render() + "\n")
        out.write("[grid]\n" + grid.render() + "\n")
        ok = analytic.is_equilibrium and grid.is_equilibrium
        if analytic.is_equilibrium != grid.is_equilibrium:
            out.write("note: analytic and grid verdicts differ at this grid resolution\n")
    else:
        try:
            s_i, s_c = float(args.si), float(args.sc)
        except ValueError as exc:
            raise DomainError(f"shares must be numbers, got {args.si!r}, {args.sc!r}") from exc
        prof = UninformedProfile(s_i, s_c, params)
        rep = verify_uninformed_grid(
            prof, args.grid_points, extension=args.mode == "uninformed-ext"
        )
        out.write(rep.render() + "\n")
        ok = rep.is_equilibrium
    return EXIT_OK if ok else EXIT_NOT_EQUILIBRIUM


def cmd_sweep(args, out=None) -> int:
    out = out or sys.stdout
    config = SweepConfig(
        alpha=args.alpha,
        v_min=args.v_min,
        v_max=args.v_max,
        v_steps=args.v_steps,
        scenarios=args.scenarios,
        output_path=args.out,
        emit_svg=args.svg,
    )
    rows = sweep_rows(config)
    text = render_csv(rows)
    if config.output_path:
        with open(config.output_path, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    if config.emit_svg:
        if not config.output_path:
            raise DomainError("--svg needs --out to know where to write the plot")
        svg_path = config.output_path.rsplit(".", 1)[0] + ".svg"
        render_svg(rows, svg_path, config.scenarios)
    if args.self_check:
        failures = self_check(rows)
        for f in failures:
            log.error("self-check: %s", f)
        if failures:
            return EXIT_SELF_CHECK
    return EXIT_OK


def cmd_cutoffs(args, out=None) -> int:
    out = out or sys.stdout
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha", "regime_boundary", "cutoff_prop3", "cutoff_prop3_bisect", "cutoff_ext"])
    status = EXIT_OK
    for a in sorted(args.alpha):
        closed = W.welfare_cutoff(a)
        bisected = W.welfare_cutoff_bisect(a, 1e-12)
        if abs(closed - bisected) > CUTOFF_AGREEMENT:
            log.error("alpha=%g: closed-form cutoff %.12g vs bisection %.12g", a, closed, bisected)
            status = EXIT_SELF_CHECK
        writer.writerow([_fmt(x) for x in (a, regime_boundary(a), closed, bisected, W.welfare_cutoff_ext(a))])
    out.write(buf.getvalue())
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="targeting", description=__doc__.splitlines()[0])
    parser.add_argument("-q", "--quiet", action="store_true", help="only log errors")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="print the equilibrium for one (alpha, v)")
    p.add_argument("mode", choices=MODES)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--v", type=float, required=True)
    p.add_argument("--placement", choices=("worst", "best"), default="worst",
                   help="where the Incumbent spends in the small-budget regime")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check whether a strategy profile is an equilibrium")
    p.add_argument("mode", choices=MODES)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--v", type=float, required=True)
    p.add_argument("--si", help="Incumbent strategy: interval literal 'lo,hi;lo,hi' or a share")
    p.add_argument("--sc", help="Challenger strategy: interval literal or a share")
    p.add_argument("--grid-left", type=int, default=8)
    p.add_argument("--grid-right", type=int, default=8)
    p.add_argument("--grid-points", type=int, default=1000,
                   help="share grid size for the uninformed games")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="welfare of every scenario over a budget grid, as CSV")
    p.add_argument("--alpha", type=_alphas, default=[0.9], help="comma-separated list")
    p.add_argument("--v-min", type=float, default=0.01)
    p.add_argument("--v-max", type=float, default=1.0)
    p.add_argument("--v-steps", type=int, default=100)
    p.add_argument("--scenarios", type=lambda s: [x for x in s.split(",") if x],
                   default=list(CURVES), help=f"curves to plot, from {','.join(CURVES)}")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--svg", action="store_true", help="also write an SVG plot next to --out")
    p.add_argument("--self-check", action="store_true",
                   help="cross-check every value against numerical integration")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("cutoffs", help="regime boundary and welfare cutoffs per alpha")
    p.add_argument("--alpha", type=_alphas, default=[0.1, 0.5, 0.9])
    p.set_defaults(func=cmd_cutoffs)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except RegimeBoundaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDARY
    except OracleError as exc:
        print(f"self-check failed: {exc}", file=sys.stderr)
        return EXIT_SELF_CHECK
    except (DomainError, GridAlignmentError, GridCapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
