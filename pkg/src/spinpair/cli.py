"""Command-line interface.

Every verb prints one JSON object on stdout unless it writes a data file.
Errors print a single JSON line on stderr and exit with 1 (bad input),
2 (numerical failure) or 3 (verification failure).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import export, limits, svg
from .axes import AxisSpec, AXIS_PARAMS, MODEL_PARAMS
from .concurrence import concurrence, ground_state_concurrence
from .errors import NumericError, ValidationError
from .model import ModelParams, analytic_spectrum, classify_ground_state, phase_diagram_raster
from .sweep import critical_temperature, sweep_1d, sweep_2d
from .verify import run_verify

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3

DEFAULT_RANGES = {
    "temp": (0.05, 10.0),
    "log_temp": (-2.0, 2.0),
    "j": (-4.0, 4.0),
    "dx": (-6.0, 6.0),
    "gx": (-6.0, 6.0),
}
PHASE_RANGES = {"j": (-2.0, 2.0), "dx": (-3.0, 3.0), "gx": (-4.0, 4.0)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _grid(text: str) -> tuple[int, int]:
    try:
        nx, ny = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NxM, got {text!r}") from None
    return nx, ny


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--j", type=float, default=1.0, help="exchange coupling J (default 1)")
    common.add_argument("--dx", type=float, default=1.0, help="DM x-component (default 1)")
    common.add_argument("--gx", type=float, default=1.0, help="KSEA x-component (default 1)")
    common.add_argument("--method", choices=("analytic", "oracle"), default="analytic")
    common.add_argument("--output", metavar="PATH")

    parser = _Parser(prog="spinpair", description="Thermal entanglement of a two-qubit XXX chain with DM and KSEA couplings.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("concurrence", parents=[common], help="concurrence at one temperature")
    p.add_argument("--temp", type=float, default=1.0, help="temperature; 0 gives the ground-state value")

    sub.add_parser("spectrum", parents=[common], help="closed-form energies, angles and eigenvectors")
    sub.add_parser("ground-state", parents=[common], help="zero-temperature ground-state class")

    p = sub.add_parser("sweep", parents=[common], help="1D curve or 2D heatmap of the concurrence")
    p.add_argument("--temp", type=float, default=1.0)
    p.add_argument("--param", choices=AXIS_PARAMS)
    p.add_argument("--from", dest="lo", type=float)
    p.add_argument("--to", dest="hi", type=float)
    p.add_argument("--steps", type=int, default=241)
    _add_2d_axes(p, default_x=None, default_y=None)
    p.add_argument("--grid", type=_grid, default=(101, 101), metavar="NxM")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--svg", metavar="PATH", help="also render an SVG plot")

    p = sub.add_parser("phase-diagram", parents=[common], help="zero-temperature ground-state raster")
    _add_2d_axes(p, default_x="dx", default_y="gx", choices=MODEL_PARAMS)
    p.add_argument("--grid", type=_grid, default=(200, 200), metavar="NxM")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--svg", metavar="PATH", help="also render an SVG plot")

    p = sub.add_parser("tc", parents=[common], help="threshold temperature above which C = 0")
    p.add_argument("--t-max", type=float, default=100.0)
    p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser("limits", parents=[common], help="asymptotic formulas next to the exact value")
    p.add_argument("--case", choices=limits.CASES, required=True)
    p.add_argument("--temp", type=float, default=1.0)

    p = sub.add_parser("verify", parents=[common], help="randomized analytic-vs-oracle agreement check")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-9)
    return parser


def _add_2d_axes(p, default_x, default_y, choices=AXIS_PARAMS):
    p.add_argument("--x-param", choices=choices, default=default_x)
    p.add_argument("--x-from", type=float)
    p.add_argument("--x-to", type=float)
    p.add_argument("--y-param", choices=choices, default=default_y)
    p.add_argument("--y-from", type=float)
    p.add_argument("--y-to", type=float)


def _axis(param, lo, hi, steps, defaults=DEFAULT_RANGES) -> AxisSpec:
    dlo, dhi = defaults[param]
    return AxisSpec(param, dlo if lo is None else lo, dhi if hi is None else hi, steps)


def _emit(args, text: str) -> None:
    if args.output:
        export.atomic_write_text(args.output, text)
    else:
        sys.stdout.write(text)


def _params(args) -> ModelParams:
    return ModelParams(args.j, args.dx, args.gx)


def _cmd_concurrence(args) -> int:
    p = _params(args)
    if args.temp == 0:
        res = ground_state_concurrence(p)
        gs = classify_ground_state(p)
        extra = {"ground_state": gs.label, "degenerate_with": list(gs.degenerate_with)}
    else:
        res = concurrence(p, args.temp, args.method)
        extra = {}
    _emit(args, export.dumps({
        **export.params_dict(p), "temp": args.temp, "method": args.method, "path": res.path,
        "value": res.value, "lambdas": [float(x) for x in res.lambdas], **extra,
    }))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    p = _params(args)
    s = analytic_spectrum(p)
    vecs = [[[float(z.real), float(z.imag)] for z in s.eigenvectors[:, k]] for k in range(4)]
    _emit(args, export.dumps({
        **export.params_dict(p), "energies": [float(e) for e in s.energies], "eta": s.eta,
        "theta1": s.theta1, "theta2": s.theta2, "eigenvectors": vecs,
    }))
    return EXIT_OK


def _cmd_ground_state(args) -> int:
    p = _params(args)
    gs = classify_ground_state(p)
    c = ground_state_concurrence(p).value
    _emit(args, export.dumps({
        **export.params_dict(p), "label": gs.label, "energy": gs.energy,
        "degenerate_with": list(gs.degenerate_with), "concurrence": c,
    }))
    return EXIT_OK


def _write_data(args, text_by_format, svg_text):
    if args.format == "svg":
        _emit(args, svg_text())
    else:
        _emit(args, text_by_format[args.format]())
    if args.svg:
        export.atomic_write_text(args.svg, svg_text())


def _series_label(args, res) -> str:
    if res.axes[0].is_temperature:
        return f"J={args.j:g} Dx={args.dx:g} Gx={args.gx:g}"
    return f"T={args.temp:g}"


def _cmd_sweep(args) -> int:
    p = _params(args)
    if args.x_param or args.y_param:
        if not (args.x_param and args.y_param):
            raise ValidationError("a 2D sweep needs both --x-param and --y-param")
        nx, ny = args.grid
        ax = _axis(args.x_param, args.x_from, args.x_to, nx)
        ay = _axis(args.y_param, args.y_from, args.y_to, ny)
        res = sweep_2d(ax, ay, p, args.temp, args.method)
    else:
        if not args.param:
            raise ValidationError("sweep needs --param (1D) or --x-param/--y-param (2D)")
        res = sweep_1d(_axis(args.param, args.lo, args.hi, args.steps), p, args.temp, args.method)
    _write_data(
        args,
        {"csv": lambda: export.sweep_csv(res), "json": lambda: export.sweep_json(res)},
        lambda: svg.line_plot([(_series_label(args, res), res)]) if len(res.axes) == 1 else svg.heatmap(res),
    )
    return EXIT_OK


def _cmd_phase(args) -> int:
    p = _params(args)
    nx, ny = args.grid
    ax = _axis(args.x_param, args.x_from, args.x_to, nx, PHASE_RANGES)
    ay = _axis(args.y_param, args.y_from, args.y_to, ny, PHASE_RANGES)
    grid = phase_diagram_raster(ax, ay, p)
    _write_data(
        args,
        {"csv": lambda: export.phase_csv(grid, ax, ay), "json": lambda: export.phase_json(grid, ax, ay, p)},
        lambda: svg.phase_raster(grid, ax, ay),
    )
    return EXIT_OK


def _cmd_tc(args) -> int:
    p = _params(args)
    res = critical_temperature(p, args.t_max, args.tol, args.method)
    lo, hi = res.bracket
    _emit(args, export.dumps({
        **export.params_dict(p), "method": args.method, "tc": res.tc, "bracket": [lo, hi],
        "tolerance": res.tolerance,
        "c_at_lo": concurrence(p, lo, args.method).value, "c_at_hi": concurrence(p, hi, args.method).value,
    }))
    return EXIT_OK


def _cmd_limits(args) -> int:
    p = _params(args)
    out = limits.compare(args.case, p, args.temp)
    _emit(args, export.dumps({**export.params_dict(p), "temp": args.temp, **out}))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verify(args.samples, args.seed, args.tol)
    _emit(args, export.dumps(report.to_dict()))
    return EXIT_OK if report.ok else EXIT_VERIFY


COMMANDS = {
    "concurrence": _cmd_concurrence,
    "spectrum": _cmd_spectrum,
    "ground-state": _cmd_ground_state,
    "sweep": _cmd_sweep,
    "phase-diagram": _cmd_phase,
    "tc": _cmd_tc,
    "limits": _cmd_limits,
    "verify": _cmd_verify,
}


def _fail(kind: str, exc: BaseException, code: int) -> int:
    line = {"error": kind, "type": type(exc).__name__, "message": str(exc)}
    index = getattr(exc, "grid_index", None)
    if index is not None:
        line["grid_index"] = index
    sys.stderr.write(json.dumps(line) + "\n")
    return code


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        return _fail("usage", exc, EXIT_USAGE)
    except ValidationError as exc:
        return _fail("validation", exc, EXIT_USAGE)
    except NumericError as exc:
        return _fail("numeric", exc, EXIT_NUMERIC)
    except OSError as exc:
        return _fail("io", exc, EXIT_USAGE)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
