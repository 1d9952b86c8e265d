"""Exact 1D difference operators for conservative viscous schemes.

Two families of sixth-order conservative discretizations of the diffusion
divergence d/dx(du/dx) are represented here, plus a fourth-order baseline:

* ``shen6`` -- the gradient-interpolation scheme of Shen, Zha & Chen (2010):
  sixth-order central cell gradients are interpolated to the faces and the
  divergence is taken with a three-pair weighted flux difference.  The
  composed operator spans 17 cells and its Fourier symbol vanishes at the
  grid Nyquist frequency, so checkerboard (odd-even) modes are never damped.

* ``alpha6`` -- a sixth-order alpha-damping scheme: the face gradient is a
  consistent average of fourth-order cell gradients plus a damping term
  proportional to the jump between quadratic face reconstructions,
  (alpha / 2 dx) * (u_R - u_L).  With alpha = 38/15 and beta = -11/228 the
  composed operator is the classic 7-cell sixth-order second derivative,
  which damps every nonzero frequency.

* ``alpha4`` -- the fourth-order alpha-damping baseline of Nishikawa
  (AIAA 2010-5093): second-order gradients, linear reconstructions
  (beta = 0) and alpha = 8/3.

All coefficients are stored as exact ``fractions.Fraction`` values; floats
appear only when a stencil is instantiated as a solver kernel.  The
accuracy and damping statements above are exact rational identities and
are tested as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

Rational = int | Fraction

#: damping / reconstruction parameters that make the alpha-damping face
#: gradient sixth-order accurate (see spectral.solve_damping_params, which
#: re-derives them from the moment conditions)
ALPHA6_ALPHA = Fraction(38, 15)
ALPHA6_BETA = Fraction(-11, 228)
#: fourth-order baseline: unique alpha cancelling the theta^4 moment
ALPHA4_ALPHA = Fraction(8, 3)

#: flux-difference pair weights of the three-pair conservative divergence
SHEN_C = (Fraction(75, 64), Fraction(-25, 384), Fraction(3, 640))
#: face-interpolation weights applied to cell gradients at offsets -2..+3
SHEN_FACE_INTERP = (Fraction(3, 256), Fraction(-25, 256), Fraction(150, 256),
                    Fraction(150, 256), Fraction(-25, 256), Fraction(3, 256))

#: central first-derivative weights (per 1/dx) by accuracy order
GRADIENT_WEIGHTS: dict[int, dict[int, Fraction]] = {
    2: {-1: Fraction(-1, 2), 1: Fraction(1, 2)},
    4: {-2: Fraction(1, 12), -1: Fraction(-2, 3),
        1: Fraction(2, 3), 2: Fraction(-1, 12)},
    6: {-3: Fraction(-1, 60), -2: Fraction(3, 20), -1: Fraction(-3, 4),
        1: Fraction(3, 4), 2: Fraction(-3, 20), 3: Fraction(1, 60)},
}

VISCOUS_KINDS = ("alpha6", "shen6", "alpha4")


class StencilUsageError(ValueError):
    """Raised for malformed stencil inputs (wrong window length, bad spec)."""


@dataclass(frozen=True)
class Stencil1D:
    """A finite-support discrete operator on a uniform 1D line.

    Applying the stencil to data ``u`` at cell ``j`` yields
    ``sum_m weights[m] * u[j + m] / dx**dx_power``.  Zero weights are not
    stored.  ``dx_power`` is 1 for a first-derivative operator, 2 for the
    diffusion divergences built by :func:`assemble_divergence_stencil`.
    """

    weights: Mapping[int, Fraction]
    dx_power: int = 0

    def __post_init__(self):
        clean = {int(m): Fraction(w) for m, w in self.weights.items() if w != 0}
        object.__setattr__(self, "weights", clean)

    def offsets(self) -> list[int]:
        return sorted(self.weights)

    def weight(self, m: int) -> Fraction:
        return self.weights.get(m, Fraction(0))

    @property
    def radius(self) -> int:
        return max((abs(m) for m in self.weights), default=0)

    def is_symmetric(self) -> bool:
        return all(self.weight(-m) == w for m, w in self.weights.items())

    def shifted(self, t: int) -> "Stencil1D":
        return Stencil1D({m + t: w for m, w in self.weights.items()}, self.dx_power)

    def __add__(self, other: "Stencil1D") -> "Stencil1D":
        if self.dx_power != other.dx_power:
            raise StencilUsageError("cannot add stencils of different dx powers")
        merged = dict(self.weights)
        for m, w in other.weights.items():
            merged[m] = merged.get(m, Fraction(0)) + w
        return Stencil1D(merged, self.dx_power)

    def __sub__(self, other: "Stencil1D") -> "Stencil1D":
        return self + (other * Fraction(-1))

    def __mul__(self, s: Rational) -> "Stencil1D":
        s = Fraction(s)
        return Stencil1D({m: w * s for m, w in self.weights.items()}, self.dx_power)

    __rmul__ = __mul__

    def apply(self, window: Sequence, dx=1) -> float:
        """Apply to a window centered on the target cell.

        The window must have length ``2 * radius + 1``.  Fraction windows
        with a Fraction dx stay exact.
        """
        r = self.radius
        if len(window) != 2 * r + 1:
            raise StencilUsageError(
                f"window length {len(window)} != {2 * r + 1} required by stencil")
        acc = sum(w * window[r + m] for m, w in self.weights.items())
        return acc / dx**self.dx_power if self.dx_power else acc

    def apply_periodic(self, u: np.ndarray, dx: float = 1.0) -> np.ndarray:
        """Apply along the last axis of a periodic array (float arithmetic)."""
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u)
        for m, w in self.weights.items():
            out += float(w) * np.roll(u, -m, axis=-1)
        return out / dx**self.dx_power

    def taps(self) -> tuple[np.ndarray, np.ndarray]:
        """Offsets and float weights, sorted by offset (kernel instantiation)."""
        ms = np.array(self.offsets(), dtype=int)
        return ms, np.array([float(self.weights[m]) for m in ms])


@dataclass(frozen=True)
class SchemeSpec:
    """Selects and parameterizes a viscous scheme.

    ``alpha`` enters the damping term of the alpha-damping face gradient
    and the viscous time-step limit; ``beta`` weights the curvature term of
    the quadratic face reconstruction.  ``shen6`` has no damping parameter
    of its own; it carries alpha = 38/15 so that both sixth-order schemes
    run under the same viscous time-step restriction.
    """

    kind: str
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if self.kind not in VISCOUS_KINDS:
            raise StencilUsageError(f"unknown scheme kind {self.kind!r}")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.kind in ("alpha6", "alpha4") and self.alpha <= 0:
            raise StencilUsageError("alpha-damping schemes require alpha > 0")

    @property
    def gradient_order(self) -> int:
        return {"alpha6": 4, "shen6": 6, "alpha4": 2}[self.kind]

    @property
    def stencil_radius(self) -> int:
        """Support radius of the assembled diffusion divergence."""
        return {"alpha6": 3, "shen6": 8, "alpha4": 2}[self.kind]


def alpha_damping6() -> SchemeSpec:
    return SchemeSpec("alpha6", ALPHA6_ALPHA, ALPHA6_BETA)


def shen6() -> SchemeSpec:
    # alpha retained only for the shared viscous time-step rule
    return SchemeSpec("shen6", ALPHA6_ALPHA, Fraction(0))


def alpha_damping4() -> SchemeSpec:
    return SchemeSpec("alpha4", ALPHA4_ALPHA, Fraction(0))


def scheme_spec(kind: str) -> SchemeSpec:
    """Default-parameter SchemeSpec for a kind name (CLI token)."""
    try:
        return {"alpha6": alpha_damping6, "shen6": shen6,
                "alpha4": alpha_damping4}[kind]()
    except KeyError:
        raise StencilUsageError(f"unknown viscous scheme {kind!r}") from None


@dataclass(frozen=True)
class FacePair:
    """Left/right solution traces reconstructed at one face.

    For data sampled from a linear function the two traces coincide, so the
    damping term alpha * (u_right - u_left) vanishes identically there.
    """

    u_left: float
    u_right: float

    @property
    def jump(self) -> float:
        return self.u_right - self.u_left


# ---------------------------------------------------------------------------
# pointwise operations (window-based; the vectorized solver kernels live in
# viscous.py and instantiate the same coefficient tables)
# ---------------------------------------------------------------------------

def cell_gradient(window: Sequence, order: int, dx=1):
    """Central-difference first derivative at the center of the window.

    window length must be order + 1 (7/5/3 for order 6/4/2); exact for
    polynomials of degree <= order.
    """
    if order not in GRADIENT_WEIGHTS:
        raise StencilUsageError(f"unsupported gradient order {order}")
    stencil = Stencil1D(GRADIENT_WEIGHTS[order], dx_power=1)
    return stencil.apply(window, dx)


def reconstruct_face(window: Sequence, grad_center, side: str, beta, dx=1):
    """Quadratic face trace from the cell that owns the given side.

    ``window`` is (u_{c-1}, u_c, u_{c+1}) for the owning cell c; the left
    trace extrapolates forward (+dx/2), the right trace backward (-dx/2),
    and both carry the curvature correction beta * (u_{c+1} - 2u_c + u_{c-1}).
    """
    if len(window) != 3:
        raise StencilUsageError("reconstruct_face expects a 3-cell window")
    um, uc, up = window
    sign = {"left": 1, "right": -1}.get(side)
    if sign is None:
        raise StencilUsageError(f"side must be 'left' or 'right', got {side!r}")
    return uc + sign * grad_center * dx / 2 + beta * (up - 2 * uc + um)


def _adjacent_cell_gradients(window: Sequence, order: int, dx):
    """Gradients at cells j and j+1 from the 6-cell window u_{j-2}..u_{j+3}."""
    if len(window) != 6:
        raise StencilUsageError("expected a 6-cell window u_{j-2}..u_{j+3}")
    r = order // 2
    gl = cell_gradient(window[2 - r: 3 + r], order, dx)
    gr = cell_gradient(window[3 - r: 4 + r], order, dx)
    return gl, gr


def reconstruct_face_pair(window: Sequence, spec: SchemeSpec, dx=1) -> FacePair:
    """Both traces at face j+1/2 from the 6-cell window u_{j-2}..u_{j+3}."""
    if spec.kind not in ("alpha6", "alpha4"):
        raise StencilUsageError("face reconstructions belong to alpha-damping schemes")
    gl, gr = _adjacent_cell_gradients(window, spec.gradient_order, dx)
    u_left = reconstruct_face(window[1:4], gl, "left", spec.beta, dx)
    u_right = reconstruct_face(window[2:5], gr, "right", spec.beta, dx)
    return FacePair(u_left, u_right)


def face_gradient_alpha(window: Sequence, spec: SchemeSpec, dx=1):
    """Alpha-damping face gradient at j+1/2 from u_{j-2}..u_{j+3}.

    Consistent average of the two adjacent cell gradients plus the jump
    penalty (alpha / 2 dx) * (u_R - u_L).
    """
    if spec.kind not in ("alpha6", "alpha4"):
        raise StencilUsageError("face_gradient_alpha requires an alpha-damping spec")
    gl, gr = _adjacent_cell_gradients(window, spec.gradient_order, dx)
    pair = reconstruct_face_pair(window, spec, dx)
    return (gl + gr) / 2 + spec.alpha * pair.jump / (2 * dx)


def face_gradient_shen(grad_window: Sequence):
    """Sixth-order face interpolation of precomputed cell gradients.

    ``grad_window`` holds the gradients at cells j-2..j+3; the weights sum
    to one, so equal gradients pass through unchanged.
    """
    if len(grad_window) != 6:
        raise StencilUsageError("face interpolation expects 6 cell gradients")
    return sum(w * g for w, g in zip(SHEN_FACE_INTERP, grad_window))


def divergence_two_face(flux_faces: Sequence, dx=1):
    """Two-face conservative divergence: cell j gets (F_{j+1/2}-F_{j-1/2})/dx.

    ``flux_faces`` has one entry per face, length n+1 for n cells.
    """
    f = list(flux_faces)
    if len(f) < 2:
        raise StencilUsageError("need at least two faces for one cell")
    return [(f[j + 1] - f[j]) / dx for j in range(len(f) - 1)]


def divergence_shen(flux_faces: Sequence, dx=1):
    """Three-pair conservative divergence with faces out to j +- 5/2.

    ``flux_faces[k]`` is the flux at face (k - 5/2) relative to the first
    target cell, i.e. cells 0..n-1 require len(flux_faces) = n + 5.
    """
    f = list(flux_faces)
    n = len(f) - 5
    if n < 1:
        raise StencilUsageError(
            "insufficient face margin: need n + 5 faces for n cells (n >= 1)")
    c1, c2, c3 = SHEN_C
    return [(c1 * (f[j + 3] - f[j + 2])
             + c2 * (f[j + 4] - f[j + 1])
             + c3 * (f[j + 5] - f[j])) / dx for j in range(n)]


# ---------------------------------------------------------------------------
# exact operator assembly
# ---------------------------------------------------------------------------

def _delta(m: int) -> Stencil1D:
    return Stencil1D({m: Fraction(1)})


def _second_difference(at: int) -> Stencil1D:
    return Stencil1D({at - 1: Fraction(1), at: Fraction(-2), at + 1: Fraction(1)})


def alpha_face_flux_stencil(alpha: Rational, beta: Rational,
                            gradient_order: int) -> Stencil1D:
    """Weight table of the alpha-damping face gradient at face j+1/2.

    Unconstrained in (alpha, beta) so the moment solver can probe the
    parameter space; dx_power is 1 (one net division by dx).
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    grad = Stencil1D(GRADIENT_WEIGHTS[gradient_order])
    g0, g1 = grad, grad.shifted(1)
    consistent = (g0 + g1) * Fraction(1, 2)
    # the dx/2 of the extrapolation cancels the 1/dx of the gradient
    u_left = _delta(0) + g0 * Fraction(1, 2) + _second_difference(0) * beta
    u_right = _delta(1) - g1 * Fraction(1, 2) + _second_difference(1) * beta
    damping = (u_right - u_left) * (alpha / 2)
    flux = consistent + damping
    return Stencil1D(flux.weights, dx_power=1)


def shen_face_flux_stencil() -> Stencil1D:
    """Weight table of the gradient-interpolated face flux at j+1/2."""
    grad = Stencil1D(GRADIENT_WEIGHTS[6])
    flux = Stencil1D({})
    for t, c in zip(range(-2, 4), SHEN_FACE_INTERP):
        flux = flux + grad.shifted(t) * c
    return Stencil1D(flux.weights, dx_power=1)


def _two_face_divergence_of(face: Stencil1D) -> Stencil1D:
    body = Stencil1D(face.weights)
    return Stencil1D((body - body.shifted(-1)).weights, dx_power=2)


def _three_pair_divergence_of(face: Stencil1D) -> Stencil1D:
    body = Stencil1D(face.weights)
    c1, c2, c3 = SHEN_C
    out = ((body - body.shifted(-1)) * c1
           + (body.shifted(1) - body.shifted(-2)) * c2
           + (body.shifted(2) - body.shifted(-3)) * c3)
    return Stencil1D(out.weights, dx_power=2)


def assemble_alpha_damping(alpha: Rational, beta: Rational,
                           gradient_order: int = 4) -> Stencil1D:
    """Composed diffusion divergence of an alpha-damping scheme (exact)."""
    return _two_face_divergence_of(
        alpha_face_flux_stencil(alpha, beta, gradient_order))


def assemble_divergence_stencil(spec: SchemeSpec) -> Stencil1D:
    """Exact cell-to-cell weights of the full composed diffusion operator.

    Composes gradients -> face flux -> conservative divergence; the result
    is symmetric with zero weight sum, dx_power 2.  Support radius is 3 for
    alpha6, 8 for shen6 and 2 for alpha4.
    """
    if spec.kind == "shen6":
        return _three_pair_divergence_of(shen_face_flux_stencil())
    return assemble_alpha_damping(spec.alpha, spec.beta, spec.gradient_order)
