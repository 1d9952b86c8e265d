"""Bit-specified CSV artifacts: snapshots, diagnostics, spectral tables.

Snapshot format: comment header ``# nx=<int> ny=<int> time=<float>
gamma=<float>`` followed by ``# x,y,rho,u,v,p`` and one row per cell in
row-major order (y outer, x inner), every float printed with 17
significant digits so the text round-trips float64 exactly.  Reading is
the exact inverse.  Diagnostics and spectral tables are plain CSV with a
header row.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .gas import GasModel, Primitives, conserved_from_primitives, \
    primitives_from_conserved
from .solver import Diagnostics, FlowState, Grid2D
from .spectral import spectral_table
from .stencils import SchemeSpec

_FMT = "%.17g"


class SnapshotFormatError(ValueError):
    """Malformed snapshot file; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"{message} (line {line})")


def write_snapshot(state: FlowState, gas: GasModel, path) -> None:
    grid = state.grid
    prim = primitives_from_conserved(state.interior, gas)
    xc, yc = grid.xc, grid.yc
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# nx={grid.nx} ny={grid.ny} time={state.t!r} "
                 f"gamma={gas.gamma!r}\n")
        fh.write("# x,y,rho,u,v,p\n")
        for i in range(grid.ny):
            for j in range(grid.nx):
                row = (xc[j], yc[i], prim.rho[i, j], prim.u[i, j],
                       prim.v[i, j], prim.p[i, j])
                fh.write(",".join(_FMT % val for val in row) + "\n")


def read_snapshot(path, ghost: int = 3) -> tuple[FlowState, float]:
    """Inverse of write_snapshot; returns the state and the header gamma.

    Domain bounds are recovered from the stored cell centers, so
    write(read(write(s))) is byte-identical to write(s).
    """
    lines = open(path, encoding="utf-8").read().splitlines()
    if not lines or not lines[0].startswith("#"):
        raise SnapshotFormatError("missing snapshot header", 1)
    meta: dict[str, str] = {}
    for token in lines[0].lstrip("#").split():
        key, _, value = token.partition("=")
        meta[key] = value
    try:
        nx, ny = int(meta["nx"]), int(meta["ny"])
        t, gamma = float(meta["time"]), float(meta["gamma"])
    except (KeyError, ValueError):
        raise SnapshotFormatError("bad header fields", 1) from None

    data = np.zeros((6, ny, nx))
    count = 0
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 6:
            raise SnapshotFormatError("expected 6 comma-separated values",
                                      lineno)
        if count >= nx * ny:
            raise SnapshotFormatError("more rows than nx*ny", lineno)
        i, j = divmod(count, nx)
        try:
            data[:, i, j] = [float(x) for x in parts]
        except ValueError:
            raise SnapshotFormatError("unparsable float", lineno) from None
        count += 1
    if count != nx * ny:
        raise SnapshotFormatError(
            f"expected {nx * ny} rows, found {count}", len(lines))

    x, y = data[0], data[1]
    dx = (x[0, -1] - x[0, 0]) / (nx - 1) if nx > 1 else 1.0
    dy = (y[-1, 0] - y[0, 0]) / (ny - 1) if ny > 1 else 1.0
    grid = Grid2D(nx=nx, ny=ny,
                  x0=x[0, 0] - dx / 2, x1=x[0, -1] + dx / 2,
                  y0=y[0, 0] - dy / 2, y1=y[-1, 0] + dy / 2,
                  ghost=ghost)
    gas = GasModel(gamma=gamma)
    prim = Primitives(data[2], data[3], data[4], data[5])
    q_int = conserved_from_primitives(prim, gas)
    g = ghost
    q = np.pad(q_int, ((0, 0), (g, g), (g, g)), mode="edge")
    return FlowState(q=q, grid=grid, t=t), gamma


def write_diagnostics(diags: list[Diagnostics], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("time,total_mass,min_rho,min_p,sawtooth\n")
        for d in diags:
            row = (d.time, d.total_mass, d.min_density, d.min_pressure,
                   d.sawtooth_metric)
            fh.write(",".join(_FMT % val for val in row) + "\n")


def read_diagnostics(path) -> np.ndarray:
    """Diagnostics series as a (steps, 5) float array."""
    return np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)


def write_spectral_csv(path, specs: list[SchemeSpec],
                       n_samples: int = 128) -> None:
    """Fourier-operator table: theta, -theta^2, then Re F per scheme."""
    names, table = spectral_table(specs, n_samples)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(names) + "\n")
        for row in table:
            fh.write(",".join(_FMT % val for val in row) + "\n")
