"""Ideal-gas thermodynamics and conserved/primitive conversions.

Conserved state Q = (rho, rho*u, rho*v, E) with total energy per unit
volume E = p/(gamma-1) + rho*(u^2+v^2)/2.  Temperature uses the ideal-gas
law T = p/(R*rho); with cp = R*gamma/(gamma-1) and kappa = cp*mu/Pr the
heat flux -kappa*dT/dx reproduces the common mu/(Pr*(gamma-1)) * d(gamma
p/rho)/dx form exactly, so a single temperature definition serves both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class PositivityError(FloatingPointError):
    """Nonpositive density or pressure met during a conversion.

    Carries the offending field name and the flat/grid indices of the first
    few violating cells so run diagnostics can report a location.
    """

    def __init__(self, field: str, indices, values):
        self.field = field
        self.indices = indices
        self.values = values
        super().__init__(
            f"nonpositive {field} at cell(s) {indices}: {values}")


@dataclass(frozen=True)
class GasModel:
    """Calorically perfect gas with constant transport properties."""

    gamma: float = 1.4
    Pr: float = 0.73
    R: float = 1.0
    mu: float = 0.0

    def __post_init__(self):
        if not self.gamma > 1:
            raise ValueError("gamma must exceed 1")
        if not (self.Pr > 0 and self.R > 0 and self.mu >= 0):
            raise ValueError("require Pr > 0, R > 0, mu >= 0")

    @property
    def cp(self) -> float:
        return self.R * self.gamma / (self.gamma - 1.0)

    @property
    def kappa(self) -> float:
        return self.cp * self.mu / self.Pr


@dataclass
class Primitives:
    """Primitive fields (scalars or same-shape arrays): rho, u, v, p."""

    rho: np.ndarray
    u: np.ndarray
    v: np.ndarray
    p: np.ndarray

    def stack(self) -> np.ndarray:
        return np.stack([self.rho, self.u, self.v, self.p])


def _first_bad(name: str, arr: np.ndarray) -> PositivityError:
    bad = np.argwhere(~(np.asarray(arr) > 0))
    shown = [tuple(ix) for ix in bad[:4]]
    vals = [np.asarray(arr)[tuple(ix)] for ix in bad[:4]]
    return PositivityError(name, shown, vals)


def primitives_from_conserved(q: np.ndarray, gas: GasModel,
                              check: bool = True) -> Primitives:
    """Invert Q to (rho, u, v, p); p = (gamma-1)(E - rho(u^2+v^2)/2).

    Raises PositivityError (with cell locations) on nonpositive density or
    pressure unless ``check`` is disabled.
    """
    q = np.asarray(q, dtype=float)
    rho = q[0]
    if check and not np.all(rho > 0):
        raise _first_bad("density", rho)
    u = q[1] / rho
    v = q[2] / rho
    p = (gas.gamma - 1.0) * (q[3] - 0.5 * rho * (u * u + v * v))
    if check and not np.all(p > 0):
        raise _first_bad("pressure", p)
    return Primitives(rho, u, v, p)


def conserved_from_primitives(prim: Primitives, gas: GasModel) -> np.ndarray:
    rho, u, v, p = prim.rho, prim.u, prim.v, prim.p
    E = p / (gas.gamma - 1.0) + 0.5 * rho * (u * u + v * v)
    return np.stack([np.asarray(rho, dtype=float), rho * u, rho * v, E])


def sound_speed(prim: Primitives, gas: GasModel) -> np.ndarray:
    return np.sqrt(gas.gamma * prim.p / prim.rho)


def temperature(prim: Primitives, gas: GasModel) -> np.ndarray:
    return prim.p / (gas.R * prim.rho)


def kinematic_viscosity(prim: Primitives, gas: GasModel) -> np.ndarray:
    return gas.mu / prim.rho
