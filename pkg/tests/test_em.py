"""Electromagnetic shift: spectral tensors, potentials, correlation tensor."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rindler_resonance import (
    DomainError,
    FieldKind,
    FieldKindError,
    Parity,
    Scenario,
    SingularityError,
    Tensor3,
    UsageError,
    em_commutator_timedomain,
    em_farzone_asymptote,
    em_inertial_potential,
    em_potential_tensors,
    em_resonance_energy,
    em_spectral_coefficients,
    em_spectral_tensors,
    em_wightman_tensor,
    reduced_geometry,
    scenario_geometry,
)

C = 299792458.0

DIAGONAL = {("x", "x"), ("y", "y"), ("z", "z")}
OFF_PAIR = {("x", "z"), ("z", "x")}
ZERO_SLOTS = [(l, m) for l in "xyz" for m in "xyz"
              if (l, m) not in DIAGONAL and (l, m) not in OFF_PAIR]

# 50-digit evaluation of the correlation tensor at zeta = 1, z = 1,
# u = S/2, eps = S/1000, n_sign = +1.
WIGHTMAN_POINT = {
    ("x", "x"): complex(-9.747698405339847178015e-26, 3.962384776693076116543e-28),
    ("y", "y"): complex(-1.309252566668632757435e-25, 6.501294713407695987811e-28),
    ("z", "z"): complex(9.747698405339847178015e-26, -3.962384776693076116543e-28),
    ("x", "z"): complex(3.344827261346480396331e-26, -2.538909936714619871268e-28),
    ("z", "x"): complex(-3.344827261346480396331e-26, 2.538909936714619871268e-28),
}


def em_scenario(theta, zeta, da=(0, 0, 1), db=(0, 0, 1), parity=Parity.SYMMETRIC):
    return Scenario.from_reduced(
        theta=theta,
        zeta=zeta,
        parity=parity,
        field_kind=FieldKind.EM,
        dipole_a=da,
        dipole_b=db,
    )


def unit_geometry():
    # zeta = 1, theta = 1, z = 1.
    return scenario_geometry(em_scenario(1.0, 1.0))


class TestTensor3:
    def test_letter_and_integer_indexing_agree(self):
        t = Tensor3(np.arange(9.0).reshape(3, 3))
        assert t["x", "z"] == t[0, 2] == 2.0
        assert t["Z", "X"] == 6.0

    def test_transpose_and_contract(self):
        t = Tensor3(np.arange(9.0).reshape(3, 3))
        assert t.transpose()["x", "z"] == t["z", "x"]
        left = np.array([1.0, 0.0, 0.0])
        right = np.array([0.0, 0.0, 1.0])
        assert t.contract(left, right) == 2.0

    def test_shape_validation(self):
        with pytest.raises(DomainError):
            Tensor3(np.zeros((2, 3)))

    def test_bad_key(self):
        t = Tensor3(np.zeros((3, 3)))
        with pytest.raises(KeyError):
            t["x"]

    def test_values_are_read_only(self):
        t = Tensor3(np.zeros((3, 3)))
        with pytest.raises(ValueError):
            t.values[0, 0] = 1.0


class TestSpectralTensors:
    def test_unit_zeta_zz_value(self):
        geom = unit_geometry()
        tensors = em_spectral_tensors(C, geom)  # x = omega*z/c = 1
        assert tensors.f["z", "z"] == pytest.approx(-1.25, rel=1e-15)

    def test_inertial_values(self):
        sc = Scenario.em_field(
            acceleration=0.0, separation=1.0, omega0=1.0,
            parity=Parity.SYMMETRIC, dipole_a=[0, 0, 1], dipole_b=[0, 0, 1],
        )
        geom = scenario_geometry(sc)
        omega = 0.75 * C
        tensors = em_spectral_tensors(omega, geom)
        x = omega / C
        assert tensors.g["z", "z"] == 2.0
        assert tensors.f["z", "z"] == pytest.approx(-2.0 * x, rel=1e-15)
        assert np.all(tensors.f_nd.values == 0.0)
        assert np.all(tensors.g_nd.values == 0.0)

    def test_rejects_negative_frequency(self):
        with pytest.raises(DomainError):
            em_spectral_tensors(-1.0, unit_geometry())

    @settings(max_examples=40)
    @given(
        st.floats(min_value=0.0, max_value=20.0),
        st.floats(min_value=0.0, max_value=50.0),
        st.floats(min_value=0.0, max_value=5.0),
    )
    def test_sparsity_pattern(self, theta, zeta, x_over_theta):
        geom = scenario_geometry(em_scenario(theta, zeta))
        omega = x_over_theta * geom.acceleration / (2.0 * C) if zeta else x_over_theta
        tensors = em_spectral_tensors(omega, geom)
        for l, m in ZERO_SLOTS:
            assert tensors.f[l, m] == 0.0
            assert tensors.g[l, m] == 0.0
        for l, m in DIAGONAL:
            assert tensors.f_nd[l, m] == 0.0
            assert tensors.g_nd[l, m] == 0.0
        assert tensors.f_nd["x", "z"] == -tensors.f_nd["z", "x"]
        assert tensors.g_nd["x", "z"] == -tensors.g_nd["z", "x"]


class TestPotentialTensors:
    def test_static_pair(self):
        pot = em_potential_tensors(scenario_geometry(em_scenario(0.0, 0.0)))
        expected = np.diag([1.0, 1.0, -2.0])
        assert np.array_equal(pot.reduced.values, expected)
        assert np.all(pot.w.values == 0.0)

    def test_half_wave_inertial_pair(self):
        pot = em_potential_tensors(scenario_geometry(em_scenario(math.pi, 0.0)))
        assert pot.reduced["z", "z"] == pytest.approx(2.0, rel=1e-14)
        assert pot.reduced["x", "x"] == pytest.approx(math.pi**2 - 1.0, rel=1e-14)
        assert pot.reduced["x", "x"] == pot.reduced["y", "y"]

    def test_matches_inertial_tensor_at_zero_acceleration(self):
        for theta in (0.0, 0.4, 1.7, math.pi, 9.3):
            geom = scenario_geometry(em_scenario(theta, 0.0))
            full = em_potential_tensors(geom).reduced.values
            limit = em_inertial_potential(geom).values
            assert np.allclose(full, limit, rtol=1e-13, atol=1e-13)

    def test_inertial_deviation_is_quadratic_in_zeta(self):
        theta = 1.0
        devs = []
        for zeta in (1e-3, 5e-4):
            geom = scenario_geometry(em_scenario(theta, zeta))
            full = em_potential_tensors(geom).reduced
            limit = em_inertial_potential(geom)
            devs.append(max(
                abs(full[l, l] - limit[l, l]) for l in "xyz"
            ))
        assert 3.5 <= devs[0] / devs[1] <= 4.5

    def test_antisymmetric_part_exact_negation(self):
        pot = em_potential_tensors(scenario_geometry(em_scenario(1.3, 2.7)))
        assert pot.w["x", "z"] == -pot.w["z", "x"]
        assert pot.w["x", "z"] != 0.0
        assert pot.reduced["x", "z"] == -pot.reduced["z", "x"]
        for l, m in ZERO_SLOTS:
            assert pot.reduced[l, m] == 0.0

    def test_antisymmetric_part_vanishes_at_rest(self):
        pot = em_potential_tensors(scenario_geometry(em_scenario(2.2, 0.0)))
        assert np.all(pot.w.values == 0.0)

    def test_reduced_consistent_with_v_plus_w(self):
        geom = scenario_geometry(em_scenario(0.9, 4.0))
        pot = em_potential_tensors(geom)
        z3 = geom.separation**3
        rebuilt = (pot.v.values + pot.w.values) * z3
        assert np.allclose(rebuilt, pot.reduced.values, rtol=1e-15, atol=0.0)


class TestResonanceEnergy:
    def test_static_zz(self):
        shift = em_resonance_energy(em_scenario(0.0, 0.0))
        assert shift.reduced == -2.0
        assert shift.field_kind is FieldKind.EM

    def test_prefactor_uses_magnitudes(self):
        shift = em_resonance_energy(
            em_scenario(0.0, 0.0, da=[0.0, 0.0, 2.0], db=[3.0, 0.0, 0.0])
        )
        assert shift.prefactor == pytest.approx(6.0, rel=1e-15)
        assert shift.si_value == shift.prefactor * shift.reduced

    def test_reduced_ignores_dipole_magnitude(self):
        small = em_resonance_energy(em_scenario(1.0, 1.0, da=[0, 0, 1], db=[0, 0, 1]))
        large = em_resonance_energy(em_scenario(1.0, 1.0, da=[0, 0, 5], db=[0, 0, 1]))
        assert large.reduced == pytest.approx(small.reduced, rel=1e-15)
        assert large.si_value == pytest.approx(5.0 * small.si_value, rel=1e-15)

    def test_cross_dipoles_vanish_at_rest(self):
        shift = em_resonance_energy(em_scenario(1.0, 0.0, da=[1, 0, 0], db=[0, 0, 1]))
        assert shift.reduced == 0.0

    def test_cross_dipoles_pick_out_xz_entry(self):
        sc = em_scenario(1.0, 1.0, da=[1, 0, 0], db=[0, 0, 1])
        shift = em_resonance_energy(sc)
        pot = em_potential_tensors(scenario_geometry(sc))
        assert shift.reduced == pot.reduced["x", "z"]
        assert shift.reduced != 0.0

    def test_rejects_zero_dipole(self):
        with pytest.raises(DomainError):
            em_resonance_energy(em_scenario(1.0, 1.0, da=[0, 0, 0]))

    def test_rejects_scalar_scenario(self):
        sc = Scenario.scalar_field(
            acceleration=0.0, separation=1.0, omega0=1.0, parity=Parity.SYMMETRIC
        )
        with pytest.raises(FieldKindError):
            em_resonance_energy(sc)

    @settings(max_examples=40)
    @given(
        st.floats(min_value=0.0, max_value=20.0),
        st.floats(min_value=0.0, max_value=100.0),
    )
    def test_parity_flip_negates_exactly(self, theta, zeta):
        sym = em_resonance_energy(em_scenario(theta, zeta, parity=Parity.SYMMETRIC))
        anti = em_resonance_energy(em_scenario(theta, zeta, parity=Parity.ANTISYMMETRIC))
        assert anti.reduced == -sym.reduced


class TestFarzoneAsymptote:
    def test_separation_axis_at_quarter_phase(self):
        zeta = 50.0
        theta = 0.5 * math.pi * zeta / math.log(2.0 * zeta)
        shift = em_farzone_asymptote(em_scenario(theta, zeta))
        assert shift.reduced == pytest.approx(-2.0 * theta, rel=1e-14)

    def test_transverse_axis_mirrors_separation_axis(self):
        zeta = 50.0
        theta = 0.5 * math.pi * zeta / math.log(2.0 * zeta)
        y_shift = em_farzone_asymptote(em_scenario(theta, zeta, da=[0, 1, 0], db=[0, 1, 0]))
        z_shift = em_farzone_asymptote(em_scenario(theta, zeta))
        assert y_shift.reduced == -z_shift.reduced

    def test_acceleration_axis_at_half_phase(self):
        zeta = 50.0
        theta = math.pi * zeta / math.log(2.0 * zeta)
        shift = em_farzone_asymptote(em_scenario(theta, zeta, da=[1, 0, 0], db=[1, 0, 0]))
        assert shift.reduced == pytest.approx(-4.0 / zeta, rel=1e-12)

    def test_converges_to_full_form(self):
        gaps = []
        for k in (2, 3, 4):
            zeta = math.sinh(k * math.pi)
            sc = em_scenario(2.0 * zeta, zeta, da=[0, 1, 0], db=[0, 1, 0])
            full = em_resonance_energy(sc).reduced
            asym = em_farzone_asymptote(sc).reduced
            gaps.append(abs(asym / full - 1.0))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 1e-9

    def test_orientation_sign(self):
        zeta = 40.0
        up = em_farzone_asymptote(em_scenario(3.0, zeta))
        down = em_farzone_asymptote(em_scenario(3.0, zeta, da=[0, 0, -1]))
        assert down.reduced == -up.reduced

    def test_parity_sign(self):
        sym = em_farzone_asymptote(em_scenario(3.0, 40.0, parity=Parity.SYMMETRIC))
        anti = em_farzone_asymptote(em_scenario(3.0, 40.0, parity=Parity.ANTISYMMETRIC))
        assert anti.reduced == -sym.reduced

    def test_rejects_off_axis_dipoles(self):
        s = 1.0 / math.sqrt(2.0)
        with pytest.raises(UsageError):
            em_farzone_asymptote(em_scenario(3.0, 40.0, da=[s, 0, s], db=[s, 0, s]))

    def test_rejects_mismatched_axes(self):
        with pytest.raises(UsageError):
            em_farzone_asymptote(em_scenario(3.0, 40.0, da=[1, 0, 0], db=[0, 0, 1]))

    def test_requires_acceleration(self):
        sc = Scenario.em_field(
            acceleration=0.0, separation=1.0, omega0=1.0,
            parity=Parity.SYMMETRIC, dipole_a=[0, 0, 1], dipole_b=[0, 0, 1],
        )
        with pytest.raises(DomainError):
            em_farzone_asymptote(sc)


class TestWightmanTensor:
    def test_reference_point(self):
        geom = unit_geometry()
        s_time = geom.light_time
        tensor = em_wightman_tensor(0.5 * s_time, geom, s_time / 1000.0)
        for (l, m), want in WIGHTMAN_POINT.items():
            got = tensor[l, m]
            assert abs(got - want) <= 1e-10 * abs(want), (l, m, got, want)

    def test_structural_zeros_and_negations(self):
        geom = unit_geometry()
        s_time = geom.light_time
        tensor = em_wightman_tensor(0.5 * s_time, geom, s_time / 1000.0)
        for l, m in ZERO_SLOTS:
            assert tensor[l, m] == 0.0
        assert tensor["z", "x"] == -tensor["x", "z"]

    def test_swapped_orientation_transposes(self):
        geom = unit_geometry()
        s_time = geom.light_time
        fwd = em_wightman_tensor(0.3 * s_time, geom, s_time / 700.0, n_sign=1)
        bwd = em_wightman_tensor(0.3 * s_time, geom, s_time / 700.0, n_sign=-1)
        assert np.array_equal(bwd.values, fwd.values.T)

    def test_imaginary_part_linear_in_regulator(self):
        geom = unit_geometry()
        s_time = geom.light_time
        coarse = em_wightman_tensor(0.5 * s_time, geom, s_time / 2000.0)
        fine = em_wightman_tensor(0.5 * s_time, geom, s_time / 4000.0)
        ratio = coarse["x", "x"].imag / fine["x", "x"].imag
        assert ratio == pytest.approx(2.0, rel=1e-3)

    def test_lightcone_crossing_raises(self):
        geom = unit_geometry()
        with pytest.raises(SingularityError):
            em_wightman_tensor(geom.light_time, geom, 1e-25)

    def test_domain_checks(self):
        geom = unit_geometry()
        s_time = geom.light_time
        with pytest.raises(DomainError):
            em_wightman_tensor(0.5 * s_time, geom, 0.0)
        with pytest.raises(DomainError):
            em_wightman_tensor(0.5 * s_time, geom, -1.0)
        with pytest.raises(DomainError):
            em_wightman_tensor(0.5 * s_time, geom, s_time / 100.0, n_sign=0)
        static = scenario_geometry(em_scenario(1.0, 0.0))
        with pytest.raises(DomainError):
            em_wightman_tensor(0.0, static, 1e-6)


class TestCommutator:
    def test_vanishes_at_equal_times(self):
        geom = unit_geometry()
        piece = em_commutator_timedomain(0.0, geom, geom.light_time / 500.0)
        assert np.all(piece.tensor.values == 0.0)
        assert piece.imag_residue == 0.0

    def test_odd_in_time_difference(self):
        geom = unit_geometry()
        s_time = geom.light_time
        fwd = em_commutator_timedomain(0.7 * s_time, geom, s_time / 500.0)
        bwd = em_commutator_timedomain(-0.7 * s_time, geom, s_time / 500.0)
        assert np.array_equal(bwd.tensor.values, -fwd.tensor.values)

    def test_result_is_real(self):
        geom = unit_geometry()
        s_time = geom.light_time
        piece = em_commutator_timedomain(0.5 * s_time, geom, s_time / 1000.0)
        assert piece.imag_residue == 0.0
        assert not np.iscomplexobj(piece.tensor.values)

    def test_supported_on_lightcone_crossing(self):
        geom = unit_geometry()
        s_time = geom.light_time
        eps = s_time / 10000.0
        near = em_commutator_timedomain(s_time * (1.0 + 1e-3), geom, eps)
        far = em_commutator_timedomain(0.5 * s_time, geom, eps)
        near_mag = np.max(np.abs(near.tensor.values))
        far_mag = np.max(np.abs(far.tensor.values))
        assert near_mag > 1e6 * far_mag
