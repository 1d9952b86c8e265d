"""Fourier (modified-wavenumber) analysis of assembled diffusion stencils.

A symmetric divergence stencil applied to the mode exp(i k x) scales it by
F(theta) / dx^2 with theta = k dx.  The exact second derivative gives
-theta^2; a scheme damps a frequency only where Re F(theta) < 0.  Two
analysis routes are kept deliberately independent:

* exact rational moments  M_n = sum_m w_m m^n  (the theta^n series
  coefficient of F is (-1)^(n/2) M_n / n!), which encode the order of
  accuracy conditions, and
* direct evaluation of F(theta) = sum_m w_m exp(i m theta).

The decomposition into m*dx-spaced second differences (coefficients D_m)
shows where high-frequency damping goes missing: even-m terms cannot see
the checkerboard mode, and odd-m terms cancel at the Nyquist frequency
whenever their signs are mixed.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .stencils import (
    ALPHA6_ALPHA,
    ALPHA6_BETA,
    SchemeSpec,
    Stencil1D,
    StencilUsageError,
    assemble_alpha_damping,
    assemble_divergence_stencil,
)


class SingularMomentSystem(ValueError):
    """The moment conditions do not determine the free parameters."""


@dataclass(frozen=True)
class SpectralSample:
    """One wavenumber theta in (0, pi] with the operator symbol F(theta)."""

    theta: float
    symbol: complex


@dataclass(frozen=True)
class DampingDecomposition:
    """Coefficients D_1..D_M of the spaced-second-difference decomposition.

    Reconstructing w_m = D_m / m^2 (with the matching center weight)
    reproduces the source stencil exactly; for a consistent diffusion
    operator the D_m sum to one.
    """

    d: tuple[Fraction, ...]

    def reconstruct(self) -> Stencil1D:
        weights: dict[int, Fraction] = {}
        for m, dm in enumerate(self.d, start=1):
            w = dm / m**2
            weights[m] = w
            weights[-m] = w
            weights[0] = weights.get(0, Fraction(0)) - 2 * w
        return Stencil1D(weights, dx_power=2)


def fourier_symbol(stencil: Stencil1D, theta: float) -> complex:
    """Symbol sum_m w_m exp(i m theta) at a wavenumber theta in (0, pi]."""
    _check_theta(theta)
    return sum(float(w) * cmath.exp(1j * m * theta)
               for m, w in stencil.weights.items())


def nyquist_symbol(stencil: Stencil1D) -> Fraction:
    """Exact symbol at theta = pi: sum of w_m * (-1)^m in rational arithmetic."""
    return sum((-w if m % 2 else w) for m, w in stencil.weights.items())


def moments(stencil: Stencil1D, n: int) -> Fraction:
    """Exact n-th moment sum_m w_m m^n for even n >= 0."""
    if n < 0 or n % 2 != 0:
        raise StencilUsageError(f"moments are defined for even n >= 0, got {n}")
    return sum(w * Fraction(m)**n for m, w in stencil.weights.items())


def dm_decomposition(stencil: Stencil1D) -> DampingDecomposition:
    """Decompose a symmetric zero-sum stencil into D_m coefficients.

    D_m = m^2 w_m for m >= 1; the center weight is implied by the zero sum.
    """
    if not stencil.is_symmetric():
        raise StencilUsageError("D_m decomposition requires a symmetric stencil")
    if moments(stencil, 0) != 0:
        raise StencilUsageError("D_m decomposition requires a zero-sum stencil")
    radius = stencil.radius
    d = tuple(Fraction(m)**2 * stencil.weight(m) for m in range(1, radius + 1))
    return DampingDecomposition(d)


def closed_form_symbol(kind: str, theta: float,
                       alpha=ALPHA6_ALPHA, beta=ALPHA6_BETA) -> float:
    """Published closed-form symbols, kept verbatim for cross-checking only.

    The ``shen6`` product form agrees with the assembled stencil at every
    wavenumber.  The ``alpha6`` form does not: it evaluates to -2*alpha at
    theta = pi while the assembled stencil gives -2*alpha*(1 - 4*beta)
    (= -272/45 at the sixth-order parameters), consistent with the scheme's
    own D_m table.  The assembled stencil is authoritative; see
    tests for the asserted discrepancy.  Never used by the solver.
    """
    _check_theta(theta)
    a, b = float(alpha), float(beta)
    c = np.cos(theta)
    if kind == "shen6":
        return (-np.sin(theta)**2
                * (3 * c * c - 14 * c + 43)
                * (9 * c * c - 58 * c + 529)
                * (2 * c * c - 9 * c + 22) / 230400)
    if kind == "alpha6":
        c2 = np.cos(2 * theta)
        return (-np.sin(theta / 2)**2 / 6
                * (24 * a * b + 5 * a
                   + 6 * (a * (4 * b - 1) + 2) * c
                   + (a - 2) * c2 + 14))
    raise StencilUsageError(f"no closed form transcribed for kind {kind!r}")


def solve_damping_params(kind: str) -> tuple[Fraction, Fraction]:
    """Parameters zeroing the lowest nonzero even moments of a scheme family.

    ``alpha6``: solve moments(4) = moments(6) = 0 for (alpha, beta); the
    assembled weights are affine in (alpha, alpha*beta), so three exact
    probe assemblies determine the linear system.  ``alpha4``: solve the
    single equation moments(4) = 0 with beta fixed at zero.
    """
    if kind == "alpha4":
        s0 = assemble_alpha_damping(0, 0, gradient_order=2)
        s1 = assemble_alpha_damping(1, 0, gradient_order=2)
        slope = moments(s1, 4) - moments(s0, 4)
        if slope == 0:
            raise SingularMomentSystem("moments(4) does not depend on alpha")
        return -moments(s0, 4) / slope, Fraction(0)
    if kind != "alpha6":
        raise StencilUsageError(f"no free-parameter family named {kind!r}")
    s00 = assemble_alpha_damping(0, 0)
    s10 = assemble_alpha_damping(1, 0)
    s11 = assemble_alpha_damping(1, 1)

    def coeffs(n):
        # M_n(u, v) = c + a*u + b*v with u = alpha, v = alpha*beta
        c = moments(s00, n)
        a = moments(s10, n) - c
        b = moments(s11, n) - moments(s10, n)
        return a, b, c

    a4, b4, c4 = coeffs(4)
    a6, b6, c6 = coeffs(6)
    det = a4 * b6 - a6 * b4
    if det == 0:
        raise SingularMomentSystem("moment conditions are linearly dependent")
    u = (-c4 * b6 + c6 * b4) / det
    v = (-a4 * c6 + a6 * c4) / det
    if u == 0:
        raise SingularMomentSystem("solved alpha is zero; beta undetermined")
    return u, v / u


def spectral_samples(stencil: Stencil1D, n_samples: int = 128) -> list[SpectralSample]:
    """Symbol sampled at theta = pi k / n_samples, k = 1..n_samples."""
    if n_samples < 2:
        raise StencilUsageError("need at least 2 samples")
    return [SpectralSample(theta, fourier_symbol(stencil, theta))
            for theta in np.pi * np.arange(1, n_samples + 1) / n_samples]


def spectral_table(specs: list[SchemeSpec], n_samples: int = 128
                   ) -> tuple[list[str], np.ndarray]:
    """Columns (theta, -theta^2, Re F per spec) over the (0, pi] grid.

    Returns the column names and an (n_samples, 2 + len(specs)) array;
    CSV emission lives in the io module.
    """
    if n_samples < 2:
        raise StencilUsageError("need at least 2 samples")
    theta = np.pi * np.arange(1, n_samples + 1) / n_samples
    columns = [theta, -theta**2]
    names = ["theta", "exact"]
    for spec in specs:
        stencil = assemble_divergence_stencil(spec)
        columns.append(np.array([fourier_symbol(stencil, t).real for t in theta]))
        names.append(spec.kind)
    return names, np.column_stack(columns)


def _check_theta(theta: float) -> None:
    if not 0 < theta <= np.pi + 1e-12:
        raise StencilUsageError(f"theta must lie in (0, pi], got {theta}")
