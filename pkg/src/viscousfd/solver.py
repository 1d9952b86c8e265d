"""2D Cartesian grid, boundary conditions, residual assembly and run loop.

The semi-discrete update is dQ/dt = Res with

    Res = -[ (Fc + Fv)_{j+1/2} - (Fc + Fv)_{j-1/2} ] / dx  - (same in y),

where the viscous face vectors carry their internal minus signs
(0, -tau_nn, -tau_nt, -(tau.u) + q), so the momentum equations receive
+d(tau)/dx: the diffusive sign every published decay/stability statement
of these schemes presumes.  The gradient-interpolation scheme's viscous
divergence uses its three-pair conservative form; the convective terms
and the alpha-damping viscous terms use plain two-face differencing.

Boundary handling mirrors ghost-cell primitives at full scheme width:
no-slip adiabatic walls flip both velocity components with even density
and pressure extension, symmetry planes flip only the normal velocity,
and periodic sides wrap.  The benchmark problem (viscous shock tube) uses
walls at x=0, x=1, y=0 and a symmetry plane at y=0.5, the standard
half-domain configuration of Daru & Tenaud (2009).
"""

from __future__ import annotations

import json
import time as _time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .gas import (
    GasModel,
    PositivityError,
    Primitives,
    conserved_from_primitives,
    primitives_from_conserved,
)
from .inviscid import convective_face_fluxes
from .stencils import SchemeSpec
from .timestepping import TimeControl, compute_dt, rk3_step
from .viscous import divergence_lines, required_ghosts, viscous_face_fluxes

BC_KINDS = ("noslip_adiabatic_wall", "symmetry", "periodic")

#: snapshot instants of the benchmark run
DEFAULT_SNAPSHOT_TIMES = (0.45, 0.50, 0.54, 0.65, 1.0)

_EVENT_TOL = 1e-12


class ConfigurationError(ValueError):
    """Inconsistent grid/boundary/scheme combination."""


@dataclass(frozen=True)
class Grid2D:
    """Uniform cell-centered Cartesian grid with ghost layers."""

    nx: int
    ny: int
    x0: float = 0.0
    x1: float = 1.0
    y0: float = 0.0
    y1: float = 0.5
    ghost: int = 3

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1 or self.ghost < 1:
            raise ConfigurationError("grid extents and ghost width must be positive")
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ConfigurationError("domain bounds must be increasing")
        if min(self.nx, self.ny) < 2 * self.ghost:
            raise ConfigurationError(
                f"need nx, ny >= {2 * self.ghost} for ghost width {self.ghost}")

    @property
    def dx(self) -> float:
        return (self.x1 - self.x0) / self.nx

    @property
    def dy(self) -> float:
        return (self.y1 - self.y0) / self.ny

    @property
    def xc(self) -> np.ndarray:
        return self.x0 + (np.arange(self.nx) + 0.5) * self.dx

    @property
    def yc(self) -> np.ndarray:
        return self.y0 + (np.arange(self.ny) + 0.5) * self.dy


def ghost_width_for(spec: SchemeSpec) -> int:
    """Ghost layers covering both the MP5 radius and the viscous stencil."""
    return max(3, required_ghosts(spec))


@dataclass
class BoundarySet:
    """Boundary kind per side; periodic sides must come in opposite pairs."""

    left: str = "periodic"
    right: str = "periodic"
    bottom: str = "periodic"
    top: str = "periodic"

    def __post_init__(self):
        for side, kind in self.as_dict().items():
            if kind not in BC_KINDS:
                raise ConfigurationError(f"unknown boundary kind {kind!r} on {side}")
        if (self.left == "periodic") != (self.right == "periodic"):
            raise ConfigurationError("periodic x-boundaries must pair up")
        if (self.bottom == "periodic") != (self.top == "periodic"):
            raise ConfigurationError("periodic y-boundaries must pair up")

    def as_dict(self) -> dict[str, str]:
        return {"left": self.left, "right": self.right,
                "bottom": self.bottom, "top": self.top}


SHOCK_TUBE_BCS = BoundarySet(left="noslip_adiabatic_wall",
                             right="noslip_adiabatic_wall",
                             bottom="noslip_adiabatic_wall",
                             top="symmetry")
PERIODIC_BCS = BoundarySet()


@dataclass
class SchemeSet:
    """Active discretizations: viscous scheme choice, MP5-cLLF convection."""

    viscous: SchemeSpec
    convective: bool = True


@dataclass
class FlowState:
    """Conserved fields (rho, rho*u, rho*v, E) with ghosts, plus the time."""

    q: np.ndarray
    grid: Grid2D
    t: float = 0.0

    @property
    def interior(self) -> np.ndarray:
        g = self.grid.ghost
        return self.q[:, g:-g, g:-g]


@dataclass(frozen=True)
class Diagnostics:
    time: float
    total_mass: float
    min_density: float
    min_pressure: float
    sawtooth_metric: float


@dataclass
class RunResult:
    status: str                       # "completed" | "failed"
    state: FlowState
    diagnostics: list[Diagnostics]
    snapshots: list[Path] = field(default_factory=list)
    error: dict | None = None
    steps: int = 0
    wall_seconds: float = 0.0


# ---------------------------------------------------------------------------
# initialization
# ---------------------------------------------------------------------------

def _state_from_primitives(prim: Primitives, grid: Grid2D, gas: GasModel,
                           t: float = 0.0) -> FlowState:
    q_int = conserved_from_primitives(prim, gas)
    g = grid.ghost
    q = np.pad(q_int, ((0, 0), (g, g), (g, g)), mode="edge")
    return FlowState(q=q, grid=grid, t=t)


def init_uniform(grid: Grid2D, gas: GasModel, rho=1.0, u=0.0, v=0.0,
                 p=1.0) -> FlowState:
    shape = (grid.ny, grid.nx)
    prim = Primitives(np.full(shape, float(rho)), np.full(shape, float(u)),
                      np.full(shape, float(v)), np.full(shape, float(p)))
    return _state_from_primitives(prim, grid, gas)


def init_viscous_shock_tube(grid: Grid2D, gas: GasModel) -> FlowState:
    """Pressurized left state against a quiescent right state, split at x=0.5.

    (rho, u, v, p) = (120, 0, 0, 120/gamma) for x < 0.5 and
    (1.2, 0, 0, 1.2/gamma) for x >= 0.5, sampled at cell centers; the
    discontinuity stays sharp (no smoothing).
    """
    left = grid.xc < 0.5
    rho_line = np.where(left, 120.0, 1.2)
    rho = np.tile(rho_line, (grid.ny, 1))
    zeros = np.zeros_like(rho)
    p = rho / gas.gamma
    return _state_from_primitives(Primitives(rho, zeros, zeros.copy(), p),
                                  grid, gas)


def init_manufactured(grid: Grid2D, gas: GasModel, amplitude=1.0) -> FlowState:
    """Shear layer u(y) = A sin(2 pi (y - y0)/Ly) on a uniform background.

    With periodic boundaries and convection disabled, the x-momentum
    residual is exactly mu times the assembled diffusion stencil applied
    along y: the cross-module diffusion oracle.
    """
    yy = np.tile(grid.yc[:, None], (1, grid.nx))
    u = amplitude * np.sin(2 * np.pi * (yy - grid.y0) / (grid.y1 - grid.y0))
    ones = np.ones_like(u)
    return _state_from_primitives(
        Primitives(ones, u, np.zeros_like(u), ones.copy()), grid, gas)


def init_checkerboard(grid: Grid2D, gas: GasModel, eps=1e-3) -> FlowState:
    """Transverse-velocity checkerboard v = eps * (-1)^j along x.

    The highest-frequency shear mode: the alpha-damping schemes damp it
    with their full Nyquist symbol while the gradient-interpolation scheme
    leaves it untouched.  Requires even nx for periodic wrap consistency.
    """
    if grid.nx % 2:
        raise ConfigurationError("checkerboard case needs an even nx")
    v_line = eps * np.where(np.arange(grid.nx) % 2 == 0, 1.0, -1.0)
    v = np.tile(v_line, (grid.ny, 1))
    ones = np.ones_like(v)
    return _state_from_primitives(
        Primitives(ones, np.zeros_like(v), v, ones.copy()), grid, gas)


# ---------------------------------------------------------------------------
# ghost filling
# ---------------------------------------------------------------------------

def _fill_axis(Q: np.ndarray, kind_low: str, kind_high: str, g: int,
               n: int, normal_comp: int, rows) -> None:
    """Fill ghost layers along the last axis of the stacked conserved array."""
    flip = {"noslip_adiabatic_wall": (1, 2), "symmetry": (normal_comp,)}

    def mirror(dst, src, kind):
        block = Q[:, rows, src][..., ::-1] if kind != "periodic" else Q[:, rows, src]
        Q[:, rows, dst] = block
        if kind in flip:
            for comp in flip[kind]:
                Q[comp, rows, dst] *= -1.0

    if kind_low == "periodic":
        mirror(slice(0, g), slice(n, n + g), "periodic")
    else:
        mirror(slice(0, g), slice(g, 2 * g), kind_low)
    if kind_high == "periodic":
        mirror(slice(n + g, n + 2 * g), slice(g, 2 * g), "periodic")
    else:
        mirror(slice(n + g, n + 2 * g), slice(n, n + g), kind_high)


def fill_ghosts(state: FlowState, bc: BoundarySet) -> FlowState:
    """Populate ghost cells by mirroring primitive fields across each side.

    Walls flip both velocity components with even density/pressure
    extension (adiabatic no-slip), symmetry planes flip only the normal
    velocity, periodic sides wrap.  These mirrors are componentwise sign
    maps, identical on primitive and conserved variables (E is even under
    velocity reversal), so they are applied to the conserved array
    directly, which keeps the operation exact.  x-ghosts are filled from
    interior rows first, then y-ghosts over full rows so corner blocks get
    the doubly-mirrored values.  The interior is untouched.
    """
    grid, g = state.grid, state.grid.ghost
    _fill_axis(state.q, bc.left, bc.right, g, grid.nx, normal_comp=1,
               rows=slice(g, g + grid.ny))
    Qt = state.q.swapaxes(1, 2)
    _fill_axis(Qt, bc.bottom, bc.top, g, grid.ny, normal_comp=2,
               rows=slice(0, grid.nx + 2 * g))
    return state


# ---------------------------------------------------------------------------
# residual
# ---------------------------------------------------------------------------

def _direction_residual(rho, u, v, p, T, gas: GasModel, schemes: SchemeSet,
                        dn: float, dt_spacing: float, ghost: int) -> np.ndarray:
    """Residual contribution of one direction in the x-orientation.

    Arrays are padded 2D fields with the face-normal axis last and the
    normal velocity in ``u``.  Returns -(div Fc + div Fv) over the interior.
    """
    g = ghost
    rows = slice(g, rho.shape[0] - g)
    ny = rho.shape[0] - 2 * g
    n = rho.shape[1] - 2 * g
    out = np.zeros((4, ny, n))
    if schemes.convective:
        conv = convective_face_fluxes(rho[rows], u[rows], v[rows], p[rows],
                                      gas, g)
        out -= (conv[..., 1:] - conv[..., :-1]) / dn
    if gas.mu > 0:
        visc = viscous_face_fluxes(u, v, T, gas, schemes.viscous,
                                   dn, dt_spacing, g)
        out -= divergence_lines(visc, schemes.viscous, dn)
    return out


def residual(state: FlowState, schemes: SchemeSet, gas: GasModel) -> np.ndarray:
    """Semi-discrete right-hand side over the interior cells (4, ny, nx).

    Requires filled ghosts.  Conversion failures propagate with cell
    indices attached.
    """
    grid = state.grid
    prim = primitives_from_conserved(state.q, gas)
    T = prim.p / (gas.R * prim.rho)

    res = _direction_residual(prim.rho, prim.u, prim.v, prim.p, T, gas,
                              schemes, grid.dx, grid.dy, grid.ghost)
    # y-direction: swap axes and velocity roles, then swap momentum rows
    # back; contiguous copies keep the line kernels on unit strides
    fields_t = [np.ascontiguousarray(f.T)
                for f in (prim.rho, prim.v, prim.u, prim.p, T)]
    res_y = _direction_residual(*fields_t, gas, schemes, grid.dy, grid.dx,
                                grid.ghost)
    res_y = res_y[[0, 2, 1, 3]].swapaxes(1, 2)
    return res + res_y


def wall_face_normal_velocity(state: FlowState, spec: SchemeSpec,
                              side: str) -> np.ndarray:
    """Scheme-interpolated normal velocity on a boundary's faces.

    For mirrored no-slip ghosts the reconstruction is antisymmetric about
    the wall, so these values vanish to round-off; they are the solver's
    no-penetration check.  Requires filled ghosts.
    """
    from .viscous import face_velocity

    g = state.grid.ghost
    ny, nx = state.grid.ny, state.grid.nx
    if side in ("left", "right"):
        un = state.q[1] / state.q[0]
        f = un[g:g + ny]
        kmin = -1 if side == "left" else nx - 1
    else:
        un = state.q[2] / state.q[0]
        f = un.T[g:g + nx]
        kmin = -1 if side == "bottom" else ny - 1
    return face_velocity(f, spec, g, kmin, 1)[:, 0]


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

def sawtooth_metric(rho: np.ndarray) -> float:
    """Checkerboard-band oscillation energy of a density field.

    Sum of squared second differences in each direction over the interior,
    normalized by cell count and squared mean density.  Insensitive to
    smooth structure, quadratic in saw-tooth amplitude.
    """
    d2x = rho[:, 2:] - 2 * rho[:, 1:-1] + rho[:, :-2]
    d2y = rho[2:, :] - 2 * rho[1:-1, :] + rho[:-2, :]
    mean = float(np.mean(rho))
    return float((np.sum(d2x**2) + np.sum(d2y**2)) / (rho.size * mean**2))


def compute_diagnostics(state: FlowState, gas: GasModel) -> Diagnostics:
    grid = state.grid
    prim = primitives_from_conserved(state.interior, gas)
    return Diagnostics(
        time=state.t,
        total_mass=float(np.sum(prim.rho)) * grid.dx * grid.dy,
        min_density=float(np.min(prim.rho)),
        min_pressure=float(np.min(prim.p)),
        sawtooth_metric=sawtooth_metric(prim.rho),
    )


# ---------------------------------------------------------------------------
# run loop
# ---------------------------------------------------------------------------

def _initial_state(config, grid: Grid2D, gas: GasModel) -> FlowState:
    if config.case == "shock_tube":
        return init_viscous_shock_tube(grid, gas)
    if config.case == "manufactured":
        return init_manufactured(grid, gas)
    if config.case == "checkerboard":
        return init_checkerboard(grid, gas, eps=config.perturbation)
    raise ConfigurationError(f"unknown case {config.case!r}")


def boundary_set_for(case: str) -> BoundarySet:
    return SHOCK_TUBE_BCS if case == "shock_tube" else PERIODIC_BCS


def run(config, output_dir: Path | str | None = None) -> RunResult:
    """Advance the configured case to t_end, emitting snapshots/diagnostics.

    Snapshots are written at the configured times (hit exactly via step
    clipping).  A positivity failure or NaN halts the run, writes a failure
    snapshot of the last valid state plus a structured error record, and
    returns a ``failed`` result: for the scheme-contrast study that outcome
    is itself a measurement, not a crash.
    """
    from . import snapshots as io

    t_start = _time.perf_counter()
    gas = config.gas()
    grid = config.grid()
    schemes = SchemeSet(viscous=config.scheme(), convective=config.convective)
    bc = boundary_set_for(config.case)
    tc = TimeControl(cfl=config.cfl, alpha_damp=float(schemes.viscous.alpha),
                     t_end=config.t_end)
    state = _initial_state(config, grid, gas)

    out = Path(output_dir) if output_dir is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)

    events = list(config.snapshot_times)
    result = RunResult(status="completed", state=state, diagnostics=[])

    def emit_snapshot(tag: float | str) -> None:
        if out is None:
            return
        name = (f"snapshot_t{tag:.6f}.csv" if isinstance(tag, float)
                else f"snapshot_{tag}.csv")
        path = out / name
        io.write_snapshot(state, gas, path)
        result.snapshots.append(path)

    def halt(reason: str, detail: str) -> RunResult:
        result.status = "failed"
        result.error = {"reason": reason, "detail": detail,
                        "time": state.t, "step": result.steps}
        emit_snapshot("failure")
        if out is not None:
            (out / "error.json").write_text(json.dumps(result.error, indent=2))
            io.write_diagnostics(result.diagnostics, out / "diagnostics.csv")
        result.wall_seconds = _time.perf_counter() - t_start
        return result

    def rhs(q: np.ndarray) -> np.ndarray:
        trial = FlowState(q=q, grid=grid, t=state.t)
        fill_ghosts(trial, bc)
        r = np.zeros_like(q)
        g = grid.ghost
        r[:, g:-g, g:-g] = residual(trial, schemes, gas)
        return r

    try:
        result.diagnostics.append(compute_diagnostics(state, gas))
    except PositivityError as exc:
        return halt("positivity", str(exc))

    if config.t_end == 0:
        emit_snapshot(0.0)

    ev = 0
    while state.t < config.t_end - _EVENT_TOL:
        try:
            dt = compute_dt(state, gas, tc)
            target = events[ev] if ev < len(events) else config.t_end
            dt = min(dt, target - state.t)
            if dt <= 0:
                ev += 1
                continue
            q_new = rk3_step(state.q, rhs, dt)
        except PositivityError as exc:
            return halt("positivity", str(exc))
        if not np.isfinite(q_new[:, grid.ghost:-grid.ghost,
                                 grid.ghost:-grid.ghost]).all():
            return halt("nan", "non-finite conserved values after step")
        state.q = q_new
        state.t += dt
        if abs(state.t - target) < _EVENT_TOL * max(1.0, target):
            state.t = target
        result.steps += 1
        try:
            result.diagnostics.append(compute_diagnostics(state, gas))
        except PositivityError as exc:
            return halt("positivity", str(exc))
        if ev < len(events) and state.t == events[ev]:
            emit_snapshot(events[ev])
            ev += 1

    if out is not None:
        io.write_diagnostics(result.diagnostics, out / "diagnostics.csv")
    result.wall_seconds = _time.perf_counter() - t_start
    return result
