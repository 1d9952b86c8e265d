"""Run a small viscous shock tube and print its diagnostics history.

A quick desk-scale version of the benchmark: the pressurized left state
drives a Mach-2.37 shock into the quiescent gas, a boundary layer grows
on the bottom wall, and after reflection the two interact.  Takes about a
minute at the default 125 x 64 resolution.

    python demos/viscous_shock_tube.py [outdir]
"""

import sys

from viscousfd.config import parse_config
from viscousfd.solver import run

CONFIG = """
nx = 125
ny = 64
Re = 500
t_end = 0.6
viscous = alpha6
snapshot_times = 0.3, 0.6
"""


def main(outdir="shock_tube_demo"):
    cfg = parse_config(CONFIG)
    print(f"running {cfg.nx} x {cfg.ny}, Re = {1 / cfg.mu:.0f}, "
          f"viscous scheme {cfg.viscous}, t_end = {cfg.t_end}")
    result = run(cfg, output_dir=outdir)
    print(f"status: {result.status} after {result.steps} steps "
          f"({result.wall_seconds:.0f} s)")
    print(f"{'time':>8s} {'mass':>12s} {'min rho':>10s} {'min p':>10s} "
          f"{'sawtooth':>12s}")
    stride = max(1, len(result.diagnostics) // 12)
    for d in result.diagnostics[::stride]:
        print(f"{d.time:8.4f} {d.total_mass:12.8f} {d.min_density:10.4f} "
              f"{d.min_pressure:10.4f} {d.sawtooth_metric:12.6g}")
    for path in result.snapshots:
        print("snapshot:", path)


if __name__ == "__main__":
    main(*sys.argv[1:])
