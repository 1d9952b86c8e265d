"""Vectorized assembly of face viscous fluxes for either scheme.

Face-normal gradients of u, v, T are computed per line with the selected
viscous scheme (alpha-damping face gradient or gradient-interpolation);
transverse derivatives at a face are the average of the two adjacent
fourth-order cell-centered derivatives, which keeps the cross terms
compact and confines the damping machinery to the face-normal direction
where the checkerboard modes live.  Face velocities for the stress work
term come from the scheme's own face reconstruction/interpolation.

Everything is written in the x-orientation: the face-normal axis is the
last array axis, the normal velocity is called ``u`` and the transverse
one ``v``.  The solver maps y-faces onto this convention by swapping axes
and velocity roles and swapping the two momentum components of the result.

Face-index convention: kernels return values at faces k+1/2 where
k = kmin .. kmin + nfaces - 1 relative to the first interior cell.  The
two-face divergence needs (kmin, nfaces) = (-1, n+1); the three-pair
divergence of the gradient-interpolation scheme needs (-3, n+5).
"""

from __future__ import annotations

import numpy as np

from .gas import GasModel
from .stencils import (
    GRADIENT_WEIGHTS,
    SHEN_C,
    SHEN_FACE_INTERP,
    SchemeSpec,
    StencilUsageError,
)


def face_range(spec: SchemeSpec, n: int) -> tuple[int, int]:
    """(kmin, nfaces) needed by the scheme's divergence over n cells."""
    if spec.kind == "shen6":
        return -3, n + 5
    return -1, n + 1


def required_ghosts(spec: SchemeSpec) -> int:
    """Ghost width so every required face gradient has a full stencil."""
    return 8 if spec.kind == "shen6" else 3


def _cells(f: np.ndarray, ghost: int, lo: int, t: int, count: int) -> np.ndarray:
    """View of cells lo+t .. lo+t+count-1 (interior-relative) on the last axis."""
    s = ghost + lo + t
    if s < 0 or s + count > f.shape[-1]:
        raise StencilUsageError("insufficient ghost layers for requested stencil")
    return f[..., s:s + count]


def cell_gradients(f: np.ndarray, order: int, dx: float, ghost: int,
                   lo: int, count: int) -> np.ndarray:
    """Central first derivative at cells lo..lo+count-1 along the last axis."""
    out = np.zeros(f.shape[:-1] + (count,))
    for t, w in GRADIENT_WEIGHTS[order].items():
        out += float(w) * _cells(f, ghost, lo, t, count)
    return out / dx


def _alpha_face_parts(f, spec: SchemeSpec, dx, ghost, kmin, nfaces):
    """Cell gradients and quadratic traces feeding faces kmin..kmax."""
    order = spec.gradient_order
    beta = float(spec.beta)
    # everything at cells kmin..kmax+1; L slices [:-1], R slices [1:]
    grads = cell_gradients(f, order, dx, ghost, kmin, nfaces + 1)
    uc = _cells(f, ghost, kmin, 0, nfaces + 1)
    d2 = (_cells(f, ghost, kmin, 1, nfaces + 1)
          - 2 * uc + _cells(f, ghost, kmin, -1, nfaces + 1))
    u_left = uc[..., :-1] + grads[..., :-1] * dx / 2 + beta * d2[..., :-1]
    u_right = uc[..., 1:] - grads[..., 1:] * dx / 2 + beta * d2[..., 1:]
    return grads, u_left, u_right


def alpha_face_gradients(f, spec: SchemeSpec, dx, ghost, kmin, nfaces):
    grads, u_left, u_right = _alpha_face_parts(f, spec, dx, ghost, kmin, nfaces)
    consistent = 0.5 * (grads[..., :-1] + grads[..., 1:])
    return consistent + float(spec.alpha) * (u_right - u_left) / (2 * dx)


def shen_face_gradients(f, dx, ghost, kmin, nfaces):
    # sixth-order cell gradients at cells kmin-2 .. kmax+3, then interpolate
    grads = cell_gradients(f, 6, dx, ghost, kmin - 2, nfaces + 5)
    out = np.zeros(f.shape[:-1] + (nfaces,))
    for i, w in enumerate(SHEN_FACE_INTERP):
        out += float(w) * grads[..., i:i + nfaces]
    return out


def face_normal_gradients(fields: dict[str, np.ndarray], spec: SchemeSpec,
                          dx: float, ghost: int, kmin: int, nfaces: int
                          ) -> dict[str, np.ndarray]:
    """Scheme face-normal derivative of each field, per variable."""
    if spec.kind == "shen6":
        return {name: shen_face_gradients(f, dx, ghost, kmin, nfaces)
                for name, f in fields.items()}
    return {name: alpha_face_gradients(f, spec, dx, ghost, kmin, nfaces)
            for name, f in fields.items()}


def face_velocity(f, spec: SchemeSpec, ghost: int, kmin: int, nfaces: int):
    """Face solution value from the scheme's own reconstruction.

    Alpha-damping schemes use the trace average (u_L + u_R)/2 (the dx of
    the gradient extrapolation cancels, so no spacing is needed); the
    gradient-interpolation scheme uses its sixth-order central face
    interpolation.
    """
    if spec.kind == "shen6":
        out = np.zeros(f.shape[:-1] + (nfaces,))
        w6 = (3.0, -25.0, 150.0, 150.0, -25.0, 3.0)
        for i, w in enumerate(w6):
            out += (w / 256.0) * _cells(f, ghost, kmin, i - 2, nfaces)
        return out
    _, u_left, u_right = _alpha_face_parts(f, spec, 1.0, ghost, kmin, nfaces)
    return 0.5 * (u_left + u_right)


def transverse_face_gradient(field: np.ndarray, dx_transverse: float,
                             ghost: int, kmin: int, nfaces: int) -> np.ndarray:
    """Transverse derivative at faces: average of adjacent cell derivatives.

    ``field`` is the full padded 2D array; the transverse direction is the
    first axis.  Fourth-order cell-centered derivatives are averaged over
    the two cells sharing each face.
    """
    g = ghost
    cells = np.zeros((field.shape[0] - 2 * g, nfaces + 1))
    for t, w in GRADIENT_WEIGHTS[4].items():
        cells += float(w) * field[g + t: field.shape[0] - g + t,
                                  g + kmin: g + kmin + nfaces + 1]
    cells /= dx_transverse
    return 0.5 * (cells[:, :-1] + cells[:, 1:])


def assemble_face_viscous_flux(dun_dn, dut_dn, dun_dt, dut_dt, dT_dn,
                               un_face, ut_face, gas: GasModel) -> np.ndarray:
    """Viscous flux 4-vector at faces, in the normal orientation's order.

    With n the face-normal direction and t transverse:
    tau_nn = (2/3) mu (2 dun/dn - dut/dt), tau_nt = mu (dun/dt + dut/dn),
    q_n = -kappa dT/dn, and the flux rows are
    (0, -tau_nn, -tau_nt, -(tau_nn un + tau_nt ut) + q_n).
    """
    mu = gas.mu
    tau_nn = (2.0 / 3.0) * mu * (2.0 * dun_dn - dut_dt)
    tau_nt = mu * (dun_dt + dut_dn)
    q_n = -gas.kappa * dT_dn
    zero = np.zeros_like(tau_nn)
    energy = -(tau_nn * un_face + tau_nt * ut_face) + q_n
    return np.stack([zero, -tau_nn, -tau_nt, energy])


def viscous_face_fluxes(u, v, T, gas: GasModel, spec: SchemeSpec,
                        dx: float, dy: float, ghost: int) -> np.ndarray:
    """Full viscous face-flux assembly over a padded 2D block (x-orientation).

    ``u``, ``v``, ``T`` are (ny + 2g, nx + 2g); returns (4, ny, nfaces)
    with the face range given by :func:`face_range`.
    """
    g = ghost
    n = u.shape[-1] - 2 * g
    kmin, nfaces = face_range(spec, n)
    rows = slice(g, u.shape[0] - g)
    grads = face_normal_gradients(
        {"u": u[rows], "v": v[rows], "T": T[rows]}, spec, dx, g, kmin, nfaces)
    dun_dt = transverse_face_gradient(u, dy, g, kmin, nfaces)
    dut_dt = transverse_face_gradient(v, dy, g, kmin, nfaces)
    un_face = face_velocity(u[rows], spec, g, kmin, nfaces)
    ut_face = face_velocity(v[rows], spec, g, kmin, nfaces)
    return assemble_face_viscous_flux(grads["u"], grads["v"], dun_dt, dut_dt,
                                      grads["T"], un_face, ut_face, gas)


def divergence_lines(flux_faces: np.ndarray, spec: SchemeSpec,
                     dx: float) -> np.ndarray:
    """Conservative divergence matching the scheme's face range.

    Two-face differencing for the alpha-damping schemes; the three-pair
    weighted form for the gradient-interpolation scheme (faces out to
    k +- 5/2, i.e. nfaces = n + 5).
    """
    f = flux_faces
    if spec.kind != "shen6":
        return (f[..., 1:] - f[..., :-1]) / dx
    c1, c2, c3 = (float(c) for c in SHEN_C)
    n = f.shape[-1] - 5
    if n < 1:
        raise StencilUsageError("insufficient face margin for three-pair divergence")
    return (c1 * (f[..., 3:3 + n] - f[..., 2:2 + n])
            + c2 * (f[..., 4:4 + n] - f[..., 1:1 + n])
            + c3 * (f[..., 5:5 + n] - f[..., 0:0 + n])) / dx
