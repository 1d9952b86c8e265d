"""Thermodynamics, conversions, and positivity diagnostics."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from viscousfd.gas import (
    GasModel,
    PositivityError,
    Primitives,
    conserved_from_primitives,
    kinematic_viscosity,
    primitives_from_conserved,
    sound_speed,
    temperature,
)

GAS = GasModel()


class TestGasModel:
    def test_derived_properties(self):
        gas = GasModel(mu=0.002)
        assert gas.cp == pytest.approx(1.4 / 0.4)
        assert gas.kappa == pytest.approx(gas.cp * 0.002 / 0.73)
        # kappa / cp = mu / Pr as stored
        assert gas.kappa / gas.cp == pytest.approx(gas.mu / gas.Pr, rel=1e-15)

    def test_invalid_parameters_rejected(self):
        with pytest.raises(ValueError):
            GasModel(gamma=1.0)
        with pytest.raises(ValueError):
            GasModel(Pr=0.0)
        with pytest.raises(ValueError):
            GasModel(mu=-1e-3)


class TestConversions:
    def test_unit_state(self):
        prim = primitives_from_conserved(np.array([1.0, 0.0, 0.0, 2.5]), GAS)
        assert (prim.rho, prim.u, prim.v) == (1.0, 0.0, 0.0)
        assert prim.p == pytest.approx(1.0, rel=1e-15)

    def test_hand_example(self):
        prim = primitives_from_conserved(np.array([2.0, 2.0, 0.0, 3.0]), GAS)
        assert prim.u == pytest.approx(1.0)
        assert prim.p == pytest.approx(0.4 * (3.0 - 1.0))

    def test_left_benchmark_state_roundtrips_bitwise(self):
        prim = Primitives(np.float64(120.0), np.float64(0.0), np.float64(0.0),
                          np.float64(120.0 / 1.4))
        q = conserved_from_primitives(prim, GAS)
        back = primitives_from_conserved(q, GAS)
        assert (back.rho, back.u, back.v, back.p) == (
            prim.rho, prim.u, prim.v, prim.p)
        assert np.array_equal(conserved_from_primitives(back, GAS), q)

    @given(rho=st.floats(1e-3, 1e3), u=st.floats(-10, 10),
           v=st.floats(-10, 10), p=st.floats(1e-3, 1e3))
    def test_roundtrip_property(self, rho, u, v, p):
        prim = Primitives(rho, u, v, p)
        back = primitives_from_conserved(conserved_from_primitives(prim, GAS),
                                         GAS)
        assert back.rho == pytest.approx(rho, rel=1e-14)
        assert back.u == pytest.approx(u, rel=1e-13, abs=1e-13)
        assert back.v == pytest.approx(v, rel=1e-13, abs=1e-13)
        assert back.p == pytest.approx(p, rel=1e-12)

    def test_positivity_failure_carries_location(self):
        q = np.ones((4, 3, 3))
        q[3] = 2.5
        q[0, 1, 2] = -0.5
        with pytest.raises(PositivityError) as err:
            primitives_from_conserved(q, GAS)
        assert err.value.field == "density"
        assert (1, 2) in err.value.indices

    def test_negative_pressure_detected(self):
        q = np.array([1.0, 5.0, 0.0, 2.5])  # huge kinetic energy
        with pytest.raises(PositivityError) as err:
            primitives_from_conserved(q, GAS)
        assert err.value.field == "pressure"


class TestSoundSpeed:
    def test_unit_speed(self):
        assert sound_speed(Primitives(1.4, 0.0, 0.0, 1.0), GAS) == 1.0

    def test_right_benchmark_state(self):
        c = sound_speed(Primitives(1.2, 0.0, 0.0, 1.2 / 1.4), GAS)
        assert c == pytest.approx(1.0, rel=1e-15)

    def test_generic_value(self):
        c = sound_speed(Primitives(1.0, 0.0, 0.0, 1.0), GAS)
        assert c == pytest.approx(np.sqrt(1.4))


class TestTemperature:
    def test_ideal_gas_identity(self):
        assert temperature(Primitives(1.0, 0.0, 0.0, 1.0), GAS) == 1.0

    def test_left_benchmark_state(self):
        T = temperature(Primitives(120.0, 0.0, 0.0, 120.0 / 1.4), GAS)
        assert T == pytest.approx(1 / 1.4, rel=1e-15)

    def test_linear_in_pressure(self):
        T1 = temperature(Primitives(2.0, 0.0, 0.0, 3.0), GAS)
        T2 = temperature(Primitives(2.0, 0.0, 0.0, 6.0), GAS)
        assert T2 == pytest.approx(2 * T1, rel=1e-15)

    @given(rho=st.floats(1e-3, 1e3), p=st.floats(1e-3, 1e3))
    def test_ideal_gas_law_closure(self, rho, p):
        T = temperature(Primitives(rho, 0.0, 0.0, p), GAS)
        assert T * GAS.R * rho == pytest.approx(p, rel=1e-14)


class TestKinematicViscosity:
    def test_benchmark_left_state(self):
        gas = GasModel(mu=1 / 500)
        nu = kinematic_viscosity(Primitives(120.0, 0.0, 0.0, 1.0), gas)
        assert nu == pytest.approx(1 / 60000, rel=1e-15)

    def test_inviscid_gas(self):
        nu = kinematic_viscosity(Primitives(1.2, 0.0, 0.0, 1.0), GAS)
        assert nu == 0.0

    def test_generic_value(self):
        gas = GasModel(mu=1e-3)
        nu = kinematic_viscosity(Primitives(1.2, 0.0, 0.0, 1.0), gas)
        assert nu == pytest.approx(1 / 1200, rel=1e-15)
