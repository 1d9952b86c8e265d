"""Time-step rule and TVD Runge-Kutta behavior."""

import numpy as np
import pytest

from viscousfd.gas import GasModel
from viscousfd.solver import Grid2D, init_uniform
from viscousfd.timestepping import TimeControl, compute_dt, rk3_step

ALPHA6 = 38.0 / 15.0


def uniform_case(dx, rho=1.4, p=1.0, u=0.0, v=0.0, mu=0.0, n=8):
    # a uniform state makes every cell the minimizer, standing in for the
    # single-cell examples
    gas = GasModel(mu=mu)
    grid = Grid2D(nx=n, ny=n, x0=0.0, x1=n * dx, y0=0.0, y1=n * dx, ghost=3)
    state = init_uniform(grid, gas, rho=rho, u=u, v=v, p=p)
    return state, gas


class TestComputeDt:
    def test_inviscid_only(self):
        # c = sqrt(1.4 * 1 / 1.4) = 1, dx = dy = 0.1, mu = 0
        state, gas = uniform_case(dx=0.1)
        tc = TimeControl(cfl=0.2, alpha_damp=ALPHA6, t_end=10.0)
        assert compute_dt(state, gas, tc) == pytest.approx(0.02, rel=1e-12)
        assert tc.dt_current == pytest.approx(0.02, rel=1e-12)

    def test_viscous_limit_formula(self):
        # rho = 1, mu = 1/500: dt_visc = (15/38) * 1e-4 * 500 = 0.019737...,
        # dt_inv = 0.01/c; the viscous limit only binds if it is smaller
        state, gas = uniform_case(dx=0.01, rho=1.0, p=1.0 / 1.4, mu=1 / 500)
        tc = TimeControl(cfl=0.2, alpha_damp=ALPHA6, t_end=10.0)
        dt_visc = (15.0 / 38.0) * 1e-4 * 500
        dt_inv = 0.01
        assert dt_visc == pytest.approx(0.019736842105263157)
        assert compute_dt(state, gas, tc) == pytest.approx(
            0.2 * min(dt_visc, dt_inv), rel=1e-12)

    def test_viscous_limit_binds_for_large_mu(self):
        state, gas = uniform_case(dx=0.1, rho=1.0, p=1.0 / 1.4, mu=0.5)
        tc = TimeControl(cfl=0.2, alpha_damp=ALPHA6, t_end=10.0)
        dt = compute_dt(state, gas, tc)
        assert dt == pytest.approx(0.2 * (15.0 / 38.0) * 0.01 / 0.5, rel=1e-12)

    def test_refinement_scaling(self):
        # halving dx: the inviscid limit halves, the viscous limit quarters
        tc = TimeControl(cfl=0.2, alpha_damp=ALPHA6, t_end=10.0)
        inv = []
        vis = []
        for dx in (0.1, 0.05):
            state, gas = uniform_case(dx=dx)
            inv.append(compute_dt(state, gas, tc))
            state, gas = uniform_case(dx=dx, rho=1.0, p=1.0 / 1.4, mu=0.5)
            vis.append(compute_dt(state, gas, tc))
        assert inv[0] / inv[1] == pytest.approx(2.0, rel=1e-12)
        assert vis[0] / vis[1] == pytest.approx(4.0, rel=1e-12)

    def test_never_exceeds_inviscid_limit(self):
        state, gas = uniform_case(dx=0.05, u=1.3, v=-0.7, mu=1e-3)
        tc = TimeControl(cfl=0.2, alpha_damp=ALPHA6, t_end=10.0)
        dt = compute_dt(state, gas, tc)
        c = np.sqrt(1.4 * 1.0 / 1.4)
        dt_inv = min(0.05 / (1.3 + c), 0.05 / (0.7 + c))
        assert dt <= 0.2 * dt_inv * (1 + 1e-14)

    def test_final_step_clipped_to_t_end(self):
        state, gas = uniform_case(dx=0.1)
        state.t = 0.995
        tc = TimeControl(cfl=0.2, alpha_damp=ALPHA6, t_end=1.0)
        assert compute_dt(state, gas, tc) == pytest.approx(0.005, rel=1e-12)

    def test_cfl_validated(self):
        with pytest.raises(ValueError):
            TimeControl(cfl=0.0)
        with pytest.raises(ValueError):
            TimeControl(cfl=1.5)


class TestRK3:
    def test_zero_rhs_is_identity_bitwise(self):
        u0 = np.array([1.1, -2.2, 3.3])
        u1 = rk3_step(u0, lambda u: np.zeros_like(u), 0.1)
        assert np.array_equal(u1, u0)

    def test_scalar_decay_matches_hand_expansion(self):
        # du/dt = -u, dt = 0.1: the three stages produce the cubic Taylor
        # polynomial 1 - 0.1 + 0.005 - 0.001/6
        got = rk3_step(1.0, lambda u: -u, 0.1)
        assert got == pytest.approx(1 - 0.1 + 0.005 - 0.001 / 6, rel=1e-14)
        assert got == pytest.approx(np.exp(-0.1), abs=1e-5)

    def test_linear_operator_gives_cubic_taylor(self):
        rng = np.random.default_rng(8)
        A = rng.normal(size=(4, 4))
        u0 = rng.normal(size=4)
        dt = 0.05
        got = rk3_step(u0, lambda u: A @ u, dt)
        taylor = (np.eye(4) + dt * A + dt**2 / 2 * A @ A
                  + dt**3 / 6 * A @ A @ A) @ u0
        assert np.allclose(got, taylor, rtol=1e-13, atol=1e-14)

    def test_temporal_order_three(self):
        # refinement study on u' = -u over [0, 1]
        def integrate(steps):
            u, dt = 1.0, 1.0 / steps
            for _ in range(steps):
                u = rk3_step(u, lambda x: -x, dt)
            return u

        errors = [abs(integrate(n) - np.exp(-1.0)) for n in (20, 40, 80)]
        orders = np.log2(np.array(errors[:-1]) / errors[1:])
        assert np.all(np.abs(orders - 3.0) <= 0.2)

    def test_stage_coefficients_are_convex(self):
        # forcing a constant rhs exposes the accumulated stage weights:
        # u_next = u + dt * r * (1 + 1/4 + ... ) = u + dt * r for constants
        u0 = 2.0
        got = rk3_step(u0, lambda u: 3.0, 0.2)
        assert got == pytest.approx(u0 + 0.2 * 3.0, rel=1e-14)

    def test_failure_leaves_input_untouched(self):
        u0 = np.array([1.0, 2.0])

        def boom(u):
            raise FloatingPointError("stage failure")

        with pytest.raises(FloatingPointError):
            rk3_step(u0, boom, 0.1)
        assert np.array_equal(u0, [1.0, 2.0])
