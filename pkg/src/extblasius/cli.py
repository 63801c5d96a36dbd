"""Command-line front end: both solvers, reproduction tables, and sweeps.

Exit codes: 0 success, 1 usage/configuration error, 2 numerical failure.
Numeric output goes to stdout (or --output FILE); diagnostics go to stderr.
"""

import argparse
import sys
from dataclasses import dataclass

from . import reference
from .errors import BadBracketError, SolverError
from .iterative import ItmConfig, solve_iterative
from .ivp import IntegratorConfig
from .model import ExtendedParams
from .noniterative import NitmResult, RowFailure, solve_noniterative, table1_sweep
from .report import SweepSpec, emit, sweep_missing_ic


@dataclass(frozen=True)
class Defaults:
    """Baseline numerical settings shared by every subcommand."""

    step_size: float = 0.001
    eta_end: float = 10.0
    order: int = 8
    sigma: float = 1.0
    bracket: tuple = (0.75, 1.75)
    tol: float = 1e-5
    max_iter: int = 100
    finder: str = "bisection"

    def integrator_config(self, step_size=None) -> IntegratorConfig:
        return IntegratorConfig(
            step_size=self.step_size if step_size is None else step_size,
            eta_end=self.eta_end,
            order=self.order,
        )


def defaults() -> Defaults:
    return Defaults()


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; this CLI reserves 2 for
    # numerical failures, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _add_integrator_flags(p, d: Defaults, step_default=None):
    p.add_argument("--step", type=float, default=step_default or d.step_size,
                   help="grid step size (default %(default)s)")
    p.add_argument("--eta-end", type=float, default=d.eta_end,
                   help="truncated far-field boundary (default %(default)s)")
    p.add_argument("--order", type=int, choices=(4, 8), default=d.order,
                   help="Runge-Kutta order (default %(default)s)")


def _add_itm_flags(p, d: Defaults):
    p.add_argument("--sigma", type=float, default=d.sigma,
                   help="embedding exponent of the fictitious parameter (default %(default)s)")
    p.add_argument("--bracket", type=float, nargs=2, metavar=("LO", "HI"), default=None,
                   help="root bracket; default (0.75**sigma, 1.75**sigma)")
    p.add_argument("--tol", type=float, default=d.tol,
                   help="tolerance on |Gamma| (default %(default)s)")
    p.add_argument("--max-iter", type=int, default=d.max_iter,
                   help="root-finder iteration cap (default %(default)s)")
    p.add_argument("--finder", choices=("bisection", "secant", "regula-falsi", "newton"),
                   default=d.finder, help="root-finding method (default %(default)s)")


def _add_output_flags(p, default_format="table"):
    p.add_argument("--format", choices=("table", "csv"), default=default_format,
                   help="output format (default %(default)s)")
    p.add_argument("--output", default=None, metavar="FILE",
                   help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    d = defaults()
    parser = _Parser(prog="extblasius",
                     description="Scaling-transformation solvers for the extended "
                                 "Blasius boundary layer (moving wall + slip).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nitm", parents=[], help="non-iterative solve from starred inputs")
    p.add_argument("--p1star", type=float, required=True, help="starred wall-velocity parameter")
    p.add_argument("--p2star", type=float, required=True, help="starred slip parameter")
    _add_integrator_flags(p, d)
    _add_output_flags(p)

    p = sub.add_parser("itm", help="iterative solve for prescribed (P1, P2)")
    p.add_argument("--p1", type=float, required=True, help="prescribed wall-velocity ratio")
    p.add_argument("--p2", type=float, required=True, help="prescribed slip parameter (>= 0)")
    p.add_argument("--trace", action="store_true", help="also print the root-finder trace")
    _add_itm_flags(p, d)
    _add_integrator_flags(p, d)
    _add_output_flags(p)

    p = sub.add_parser("blasius", help="classic flat plate: nitm at (0, 0), step 1e-4")
    _add_integrator_flags(p, d, step_default=1e-4)
    _add_output_flags(p)

    p = sub.add_parser("table1", help="reproduce the non-iterative reference table")
    _add_integrator_flags(p, d)
    _add_output_flags(p)

    p = sub.add_parser("table2", help="reproduce the bisection-trace reference table")
    _add_integrator_flags(p, d)
    _add_output_flags(p)

    p = sub.add_parser("sweep", help="wall shear over a (P1, P2) grid via the iterative solver")
    p.add_argument("--p2", type=float, nargs="+", default=[0.0, 1.0, 2.0],
                   help="slip-parameter families (default %(default)s)")
    p.add_argument("--p1-min", type=float, default=0.0)
    p.add_argument("--p1-max", type=float, default=0.9)
    p.add_argument("--p1-step", type=float, default=0.05)
    _add_itm_flags(p, d)
    _add_integrator_flags(p, d)
    _add_output_flags(p, default_format="csv")

    return parser


def _write(args, payload: bytes):
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()


def _itm_config(args) -> ItmConfig:
    bracket = args.bracket
    if bracket is None:
        # Group-consistent default: the sigma=1 bracket raised to sigma, since
        # the root scales as lam**sigma.
        bracket = (0.75**args.sigma, 1.75**args.sigma)
    return ItmConfig(sigma=args.sigma, bracket=tuple(bracket), tol=args.tol,
                     max_iter=args.max_iter, finder=args.finder)


RESULT_HEADER = ("p1_star", "p2_star", "p1", "p2", "d2f0", "lambda")


def _result_row(r: NitmResult):
    return (r.p1_star, r.p2_star, r.params.p1, r.params.p2, r.missing_ic, float(r.lam))


def _trace_rows(trace):
    # h* values are exact dyadic rationals; repr keeps every digit where the
    # 12-significant-digit cell rule would round them.
    return [(repr(e.h_star), None if e.bracket_endpoint else e.lam, e.gamma)
            for e in trace]


def _cmd_nitm(args) -> int:
    result = solve_noniterative(args.p1star, args.p2star,
                                IntegratorConfig(args.step, args.eta_end, args.order))
    _write(args, emit(RESULT_HEADER, [_result_row(result)], args.format))
    return 0


def _cmd_blasius(args) -> int:
    result = solve_noniterative(0.0, 0.0,
                                IntegratorConfig(args.step, args.eta_end, args.order))
    _write(args, emit(RESULT_HEADER, [_result_row(result)], args.format))
    return 0


def _cmd_itm(args) -> int:
    params = ExtendedParams(p1=args.p1, p2=args.p2)
    int_config = IntegratorConfig(args.step, args.eta_end, args.order)
    result, trace = solve_iterative(params, _itm_config(args), int_config)
    parts = []
    if args.trace:
        parts.append(emit(("h_star", "lambda", "gamma"), _trace_rows(trace), args.format))
        parts.append(b"\n")
    header = ("p1", "p2", "h_root", "lambda", "d2f0", "evaluations")
    row = (params.p1, params.p2, trace.final.h_star, float(result.lam),
           result.missing_ic, len(trace))
    parts.append(emit(header, [row], args.format))
    _write(args, b"".join(parts))
    return 0


def _cmd_table1(args) -> int:
    config = IntegratorConfig(args.step, args.eta_end, args.order)
    results = table1_sweep(reference.TABLE1_INPUT, config)
    header = ("p1_star", "p2_star", "p1", "p2", "d2f0", "dev_p1", "dev_p2", "dev_d2f0")
    rows = []
    for i, (res, ref) in enumerate(zip(results, reference.TABLE1)):
        if isinstance(res, RowFailure):
            rows.append((res.p1_star, res.p2_star, f"FAILED({res.reason})", "", "", "", "", ""))
            continue
        dev_p1 = res.params.p1 - ref[2]
        dev_p2 = res.params.p2 - ref[3]
        dev_d2f0 = res.missing_ic - ref[4]
        dev_p2_cell = f"{dev_p2:+.3e}"
        if i == reference.TABLE1_ERRATUM_ROW:
            dev_p2_cell += " erratum (see docs)"
        rows.append((res.p1_star, res.p2_star,
                     f"{res.params.p1:.9f}", f"{res.params.p2:.9f}", f"{res.missing_ic:.11f}",
                     f"{dev_p1:+.3e}", dev_p2_cell, f"{dev_d2f0:+.3e}"))
    _write(args, emit(header, rows, args.format))
    return 0


def _cmd_table2(args) -> int:
    p1, p2 = reference.TABLE2_PARAMS
    params = ExtendedParams(p1=p1, p2=p2)
    int_config = IntegratorConfig(args.step, args.eta_end, args.order)
    config = ItmConfig(sigma=1.0, bracket=reference.TABLE2_BRACKET, tol=reference.TABLE2_TOL)
    _, trace = solve_iterative(params, config, int_config)

    header = ("h_star", "lambda", "gamma", "dev_lambda", "dev_gamma")
    rows = []
    for entry, ref in zip(trace, reference.TABLE2):
        ref_h, ref_lam, ref_gamma = ref
        lam_cell = None if entry.bracket_endpoint else f"{entry.lam:.9f}"
        dev_lam = None if ref_lam is None else entry.lam - ref_lam
        rows.append((str(entry.h_star), lam_cell, f"{entry.gamma:.10f}",
                     None if dev_lam is None else f"{dev_lam:+.3e}",
                     f"{entry.gamma - ref_gamma:+.3e}"))
    extra = len(trace) - len(reference.TABLE2)
    for entry in list(trace)[len(reference.TABLE2):]:
        rows.append((str(entry.h_star), f"{entry.lam:.9f}", f"{entry.gamma:.10f}", "", ""))

    lines = [emit(header, rows, args.format), b"\n"]
    mids = [e.h_star for e in trace if not e.bracket_endpoint]
    ref_mids = [r[0] for r in reference.TABLE2 if r[1] is not None]
    seq_ok = extra == 0 and mids == ref_mids
    lines.append(
        f"sigma=1: midpoint sequence {'matches' if seq_ok else 'DIFFERS FROM'} "
        f"the reference trace\n".encode()
    )
    try:
        solve_iterative(params, ItmConfig(sigma=10.0, bracket=reference.TABLE2_BRACKET,
                                          tol=reference.TABLE2_TOL), int_config)
    except BadBracketError as exc:
        lines.append(f"sigma=10: cannot reproduce the reference trace ({exc})\n".encode())
    else:
        lines.append(b"sigma=10: converged on the reference bracket; "
                     b"compare traces manually\n")
    _write(args, b"".join(lines))
    return 0


def _cmd_sweep(args) -> int:
    count = round((args.p1_max - args.p1_min) / args.p1_step)
    grid = tuple(args.p1_min + i * args.p1_step for i in range(count + 1))
    grid = tuple(v for v in grid if v <= args.p1_max + 1e-12 * max(1.0, abs(args.p1_max)))
    spec = SweepSpec(
        p2_values=tuple(args.p2),
        p1_grid=grid,
        itm=_itm_config(args),
        integrator=IntegratorConfig(args.step, args.eta_end, args.order),
    )
    rows = sweep_missing_ic(spec)
    _write(args, emit(("p2", "p1", "d2f0"), rows, args.format))
    return 0


_COMMANDS = {
    "nitm": _cmd_nitm,
    "itm": _cmd_itm,
    "blasius": _cmd_blasius,
    "table1": _cmd_table1,
    "table2": _cmd_table2,
    "sweep": _cmd_sweep,
}


def run(argv) -> int:
    """Parse argv (no program name) and execute; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # remapped usage error (1) or --help (0)
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SolverError as exc:
        print(f"{exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
