"""Explicit third-order TVD Runge-Kutta stepping and the time-step rule.

The time step combines the convective CFL limit with the viscous limit
dt_v = (1/alpha) dx^2 / nu, where alpha is the damping parameter of the
active viscous scheme (Nishikawa, AIAA 2010-5093, Eq. 4.22).  Both
sixth-order schemes run with alpha = 38/15 so comparisons use identical
steps.  The final step is clipped so the run lands exactly on t_end.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gas import GasModel, primitives_from_conserved, sound_speed


@dataclass
class TimeControl:
    """CFL settings and the damping parameter entering the viscous limit."""

    cfl: float = 0.2
    alpha_damp: float = float(38) / 15
    t_end: float = 1.0
    dt_current: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if not 0 < self.cfl <= 1:
            raise ValueError("require 0 < cfl <= 1")


def compute_dt(state, gas: GasModel, tc: TimeControl) -> float:
    """cfl * min(viscous, inviscid) step, clipped to land on t_end.

    Inviscid: min over cells of dx/(|u|+c) and dy/(|v|+c).  Viscous:
    min over cells of (1/alpha) dx^2/nu with nu = mu/rho; mu = 0 turns the
    viscous limit off.
    """
    grid = state.grid
    prim = primitives_from_conserved(state.interior, gas)
    c = sound_speed(prim, gas)
    dt_inv = min(np.min(grid.dx / (np.abs(prim.u) + c)),
                 np.min(grid.dy / (np.abs(prim.v) + c)))
    if gas.mu > 0:
        nu_max = gas.mu / np.min(prim.rho)
        dt_vis = min(grid.dx**2, grid.dy**2) / (tc.alpha_damp * nu_max)
    else:
        dt_vis = np.inf
    dt = tc.cfl * min(dt_inv, dt_vis)
    remaining = tc.t_end - state.t
    if remaining > 0:
        dt = min(dt, remaining)
    tc.dt_current = dt
    return dt


def rk3_step(u, residual_fn, dt: float):
    """One step of the three-stage TVD Runge-Kutta scheme (Shu & Osher).

    u1 = u + dt L(u); u2 = 3/4 u + 1/4 (u1 + dt L(u1));
    u_next = 1/3 u + 2/3 (u2 + dt L(u2)).  Each stage is a convex
    combination of forward-Euler steps.  Purely functional: a failure in
    ``residual_fn`` propagates and leaves the input untouched.
    """
    u1 = u + dt * residual_fn(u)
    u2 = 0.75 * u + 0.25 * (u1 + dt * residual_fn(u1))
    return u / 3.0 + (2.0 / 3.0) * (u2 + dt * residual_fn(u2))
