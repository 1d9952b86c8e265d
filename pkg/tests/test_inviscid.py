"""MP5 reconstruction, characteristic projection, and cLLF flux tests."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from viscousfd.gas import GasModel, Primitives, conserved_from_primitives
from viscousfd.inviscid import (
    _convective_faces_numpy,
    _project,
    _unproject,
    characteristic_frame,
    cllf_flux,
    convective_face_fluxes,
    euler_flux,
    mp5_reconstruct,
    primitive_jacobian,
)

GAS = GasModel()
RNG = np.random.default_rng(42)


def random_primitives(n=1):
    return Primitives(rho=RNG.uniform(0.1, 5.0, n), u=RNG.uniform(-3, 3, n),
                      v=RNG.uniform(-3, 3, n), p=RNG.uniform(0.1, 5.0, n))


class TestMP5:
    def test_constant_data(self):
        assert mp5_reconstruct([2.0] * 5, "left") == 2.0
        assert mp5_reconstruct([2.0] * 5, "right") == 2.0

    def test_linear_exactness(self):
        dx = 0.25
        window = [j * dx for j in range(-2, 3)]  # cells j-2..j+2, x_j = 0
        got = mp5_reconstruct(window, "left")
        assert got == pytest.approx(dx / 2, abs=1e-15)
        window_r = [j * dx for j in range(-1, 4)]  # cells j-1..j+3
        got_r = mp5_reconstruct(window_r, "right")
        assert got_r == pytest.approx(dx / 2, abs=1e-15)

    def test_step_data_no_overshoot(self):
        for pos in range(1, 5):
            window = [0.0] * pos + [1.0] * (5 - pos)
            for side in ("left", "right"):
                got = float(mp5_reconstruct(window, side))
                assert 0.0 <= got <= 1.0

    @given(st.lists(st.floats(-10, 10), min_size=5, max_size=5))
    def test_monotone_data_stays_in_local_range(self, values):
        window = sorted(values)
        got = float(mp5_reconstruct(window, "left"))
        assert min(window) - 1e-12 <= got <= max(window) + 1e-12

    def test_smooth_data_unlimited(self):
        # smooth monotone profile: the limiter must return the raw
        # fifth-order interpolant untouched
        x = np.linspace(-0.6, 0.6, 5)
        window = np.tanh(x)
        raw = (2 * window[0] - 13 * window[1] + 47 * window[2]
               + 27 * window[3] - 3 * window[4]) / 60.0
        assert float(mp5_reconstruct(window, "left")) == raw

    def test_window_length_checked(self):
        with pytest.raises(ValueError):
            mp5_reconstruct([1.0] * 4, "left")
        with pytest.raises(ValueError):
            mp5_reconstruct([1.0] * 5, "center")


class TestCharacteristicFrame:
    def test_left_right_inverse(self):
        for _ in range(20):
            prim = random_primitives()
            frame = characteristic_frame(prim, GAS)
            left = frame.left[..., 0]
            right = frame.right[..., 0]
            assert np.allclose(left @ right, np.eye(4), atol=1e-12)

    def test_eigendecomposition_reproduces_jacobian(self):
        for _ in range(20):
            prim = random_primitives()
            frame = characteristic_frame(prim, GAS)
            A = primitive_jacobian(prim, GAS)[..., 0]
            left = frame.left[..., 0]
            right = frame.right[..., 0]
            lam = np.diag(frame.eigenvalues[:, 0])
            assert np.allclose(right @ lam @ left, A,
                               rtol=1e-10, atol=1e-10)

    def test_eigenvalues_ordering(self):
        prim = Primitives(np.array([1.0]), np.array([0.5]), np.array([2.0]),
                          np.array([1.0]))
        frame = characteristic_frame(prim, GAS)
        c = np.sqrt(1.4)
        assert frame.eigenvalues[:, 0] == pytest.approx(
            [0.5 - c, 0.5, 0.5, 0.5 + c])

    def test_projection_formulas_match_matrices(self):
        prim = random_primitives()
        frame = characteristic_frame(prim, GAS)
        state = np.array([1.7, -0.3, 0.9, 2.2])
        w_formula = np.array(_project(prim.rho[0],
                                      np.sqrt(1.4 * prim.p[0] / prim.rho[0]),
                                      *state))
        w_matrix = frame.left[..., 0] @ state
        assert np.allclose(w_formula, w_matrix, rtol=1e-13, atol=1e-13)

    def test_project_unproject_roundtrip(self):
        for _ in range(20):
            frame_state = random_primitives()
            rho_f = frame_state.rho[0]
            c_f = np.sqrt(1.4 * frame_state.p[0] / rho_f)
            vec = RNG.uniform(-5, 5, 4)
            back = _unproject(rho_f, c_f, *_project(rho_f, c_f, *vec))
            assert np.allclose(back, vec, rtol=1e-12, atol=1e-12)


class TestCLLF:
    def test_consistency_with_physical_flux(self):
        for _ in range(20):
            q = random_primitives()
            flux = cllf_flux(q, q, GAS)
            assert np.allclose(flux, euler_flux(q, GAS), rtol=1e-14,
                               atol=1e-14)

    def test_symmetric_states_zero_mass_flux(self):
        qL = Primitives(np.array([1.3]), np.array([0.8]), np.array([0.0]),
                        np.array([1.1]))
        qR = Primitives(np.array([1.3]), np.array([-0.8]), np.array([0.0]),
                        np.array([1.1]))
        flux = cllf_flux(qL, qR, GAS)
        assert flux[0, 0] == pytest.approx(0.0, abs=1e-15)

    def test_sod_states_hand_check(self):
        # independent scalar evaluation of the closed-form expression
        qL = Primitives(1.0, 0.0, 0.0, 1.0)
        qR = Primitives(0.125, 0.0, 0.0, 0.1)
        lam = max(np.sqrt(1.4 * 1.0 / 1.0), np.sqrt(1.4 * 0.1 / 0.125))
        assert lam == pytest.approx(np.sqrt(1.4))
        EL, ER = 1.0 / 0.4, 0.1 / 0.4
        expected = np.array([
            0.5 * (0.0 + 0.0) - 0.5 * lam * (0.125 - 1.0),
            0.5 * (1.0 + 0.1) - 0.5 * lam * (0.0 - 0.0),
            0.0,
            0.5 * (0.0 + 0.0) - 0.5 * lam * (ER - EL),
        ])
        flux = cllf_flux(qL, qR, GAS)
        assert np.allclose(flux, expected, rtol=1e-14, atol=1e-15)


class TestFacePipeline:
    @staticmethod
    def padded_fields(shape=(6, 40), ghost=3, seed=9):
        rng = np.random.default_rng(seed)
        rho = 1.0 + 0.5 * rng.random(shape)
        u = rng.normal(size=shape)
        v = rng.normal(size=shape)
        p = 0.5 + rng.random(shape)
        return rho, u, v, p, ghost

    def test_fused_kernel_matches_reference(self):
        rho, u, v, p, g = self.padded_fields()
        a = convective_face_fluxes(rho, u, v, p, GAS, g)
        b = _convective_faces_numpy(rho, u, v, p, GAS, g)
        assert np.array_equal(a, b)

    def test_fused_kernel_matches_reference_on_shock_data(self):
        rho, u, v, p, g = self.padded_fields(seed=10)
        rho[:, :20] = 120.0
        p[:, :20] = 120.0 / 1.4
        a = convective_face_fluxes(rho, u, v, p, GAS, g)
        b = _convective_faces_numpy(rho, u, v, p, GAS, g)
        assert np.array_equal(a, b)

    def test_uniform_flow_gives_constant_flux(self):
        shape = (4, 30)
        rho = np.full(shape, 1.2)
        u = np.full(shape, 0.7)
        v = np.full(shape, -0.2)
        p = np.full(shape, 2.0)
        flux = convective_face_fluxes(rho, u, v, p, GAS, 3)
        expected = euler_flux(Primitives(1.2, 0.7, -0.2, 2.0), GAS)
        for comp in range(4):
            assert np.all(flux[comp] == flux[comp, 0, 0])
            assert flux[comp, 0, 0] == pytest.approx(expected[comp],
                                                     rel=1e-14)

    def test_one_dimensional_input_supported(self):
        rho, u, v, p, g = self.padded_fields()
        a = convective_face_fluxes(rho[0], u[0], v[0], p[0], GAS, g)
        b = convective_face_fluxes(rho[:1], u[:1], v[:1], p[:1], GAS, g)
        assert np.array_equal(a, b[:, 0])
