"""Command-line entry points.

    viscousfd run <config> [--output-dir DIR] [--viscous KIND] [--quiet]
    viscousfd analyze [--schemes a,b,..] [--samples N] [--output PATH]
    viscousfd demo-oddeven <config> [--quiet]

Exit codes: 0 success, 2 configuration error, 3 runtime failure
(positivity loss or NaN during a run).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import solver
from .config import ConfigError, RunConfig, load_config, validate_config
from .gas import primitives_from_conserved
from .stencils import VISCOUS_KINDS, StencilUsageError, scheme_spec

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="viscousfd",
        description="Viscous-scheme analysis and 2D compressible flow runs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="advance a configured case to t_end")
    p_run.add_argument("config_path", nargs="?", default=None)
    p_run.add_argument("--config", dest="config_flag", default=None,
                       help="config file (alternative to the positional)")
    p_run.add_argument("--output-dir", default=None,
                       help="override the config's output directory")
    p_run.add_argument("--viscous", choices=VISCOUS_KINDS, default=None,
                       help="override the viscous scheme")
    p_run.add_argument("--quiet", action="store_true")

    p_an = sub.add_parser("analyze",
                          help="write the Fourier-operator table as CSV")
    p_an.add_argument("--schemes", default="alpha6,shen6,alpha4",
                      help="comma-separated scheme kinds")
    p_an.add_argument("--samples", type=int, default=128)
    p_an.add_argument("--output", default=None,
                      help="CSV path (default: <output-dir>/spectral.csv)")
    p_an.add_argument("--output-dir", default=".")
    p_an.add_argument("--quiet", action="store_true")

    p_demo = sub.add_parser(
        "demo-oddeven",
        help="checkerboard diffusion residual amplitude per scheme")
    p_demo.add_argument("config_path", nargs="?", default=None)
    p_demo.add_argument("--config", dest="config_flag", default=None)
    p_demo.add_argument("--quiet", action="store_true")
    return parser


def _load(args) -> RunConfig:
    path = args.config_flag or args.config_path
    if path is None:
        raise ConfigError("a config file is required (positional or --config)")
    return load_config(path)


def _cmd_run(args) -> int:
    config = _load(args)
    if args.viscous is not None:
        config = replace(config, viscous=args.viscous)
        validate_config(config)
    out = Path(args.output_dir) if args.output_dir else Path(config.output_dir)
    result = solver.run(config, output_dir=out)
    if not args.quiet:
        last = result.diagnostics[-1]
        print(f"status={result.status} t={last.time:.6f} steps={result.steps} "
              f"mass={last.total_mass:.9g} min_rho={last.min_density:.4g} "
              f"min_p={last.min_pressure:.4g} "
              f"sawtooth={last.sawtooth_metric:.6g} "
              f"wall_s={result.wall_seconds:.1f}")
        for path in result.snapshots:
            print(f"snapshot: {path}")
    if result.status != "completed":
        print(f"runtime failure: {result.error['reason']}: "
              f"{result.error['detail']} at t={result.error['time']:.6g}",
              file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def _cmd_analyze(args) -> int:
    from .snapshots import write_spectral_csv

    kinds = [tok.strip() for tok in args.schemes.split(",") if tok.strip()]
    if not kinds:
        raise ConfigError("no schemes given", key="schemes")
    try:
        specs = [scheme_spec(kind) for kind in kinds]
    except StencilUsageError as exc:
        raise ConfigError(str(exc), key="schemes") from None
    if args.samples < 2:
        raise ConfigError("need at least 2 samples", key="samples")
    out = (Path(args.output) if args.output
           else Path(args.output_dir) / "spectral.csv")
    out.parent.mkdir(parents=True, exist_ok=True)
    write_spectral_csv(out, specs, n_samples=args.samples)
    if not args.quiet:
        print(f"wrote {args.samples} samples for {', '.join(kinds)} to {out}")
    return EXIT_OK


def _cmd_demo_oddeven(args) -> int:
    config = _load(args)
    gas = config.gas()
    if gas.mu == 0:
        raise ConfigError("the checkerboard demo needs mu > 0 (set Re or mu)",
                          key="mu")
    if not args.quiet:
        print("normalized checkerboard residual amplitude, "
              "max|Res_rho_v| * dx^2 / (mu * eps):")
    for kind in VISCOUS_KINDS:
        spec = scheme_spec(kind)
        grid = solver.Grid2D(nx=config.nx, ny=config.ny, x0=config.x0,
                             x1=config.x1, y0=config.y0, y1=config.y1,
                             ghost=solver.ghost_width_for(spec))
        state = solver.init_checkerboard(grid, gas, eps=config.perturbation)
        solver.fill_ghosts(state, solver.PERIODIC_BCS)
        schemes = solver.SchemeSet(viscous=spec, convective=False)
        res = solver.residual(state, schemes, gas)
        amp = float(np.max(np.abs(res[2]))) * grid.dx**2 / (
            gas.mu * config.perturbation)
        print(f"{kind:8s} {amp!r}")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"run": _cmd_run, "analyze": _cmd_analyze,
               "demo-oddeven": _cmd_demo_oddeven}[args.command]
    try:
        return handler(args)
    except (ConfigError, solver.ConfigurationError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
