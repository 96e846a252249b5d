"""Dephasing channels, overlap formulas, and the Lindblad cross-check."""

from __future__ import annotations

import math

import numpy as np
import pytest

from latticedec import (
    CollectiveNoiseStrength,
    DensityMatrix,
    TrajectoryProfile,
    apply_collective_dephasing,
    apply_local_dephasing,
    gamma_of_t,
    lindblad_evolve,
    overlap_ghz,
    overlap_qg_asymptotic,
    overlap_qg_exact_sum,
    overlap_qg_quadrature,
    overlap_sc,
    scattering_rates,
)
from latticedec.constants import AtomSpecies

TWO_PI = 2.0 * math.pi

# Point-A lattice: Omega_- = 1e8 rad/s, Omega_pi = Omega_-/3, Delta = 2pi THz.
POINT_A = dict(omega_pi=1e8 / 3.0, omega_minus=1e8, delta=TWO_PI * 1e12)


def _unit_species() -> AtomSpecies:
    return AtomSpecies(
        name="unit",
        mass=1.0,
        gamma_0=1.0,
        wavelength=1.0,
        fine_structure_splitting=1e20,
    )


class TestScatteringRates:
    def test_unit_ratio_case(self):
        rates = scattering_rates(1.0, 0.0, 1.0, _unit_species())
        assert rates.gamma_g == pytest.approx(0.125, rel=1e-12)
        assert rates.gamma_s == pytest.approx(0.125, rel=1e-12)
        assert rates.gamma_sc == pytest.approx(0.25, rel=1e-12)

    def test_no_light_no_scattering(self, rb87):
        rates = scattering_rates(0.0, 0.0, 1e12, rb87)
        assert rates.gamma_g == rates.gamma_s == rates.gamma_sc == 0.0

    def test_point_a_value(self, rb87):
        rates = scattering_rates(species=rb87, **POINT_A)
        assert rates.gamma_g == pytest.approx(1.2710290594e-4, rel=1e-6)
        assert rates.gamma_s == pytest.approx(1.2710290594e-3, rel=1e-6)
        assert rates.gamma_sc == pytest.approx(1.3981319654e-3, rel=1e-6)

    def test_sum_exact(self, rb87):
        rates = scattering_rates(7.7e7, 3.1e8, 9.4e11, rb87)
        assert rates.gamma_sc == rates.gamma_g + rates.gamma_s

    def test_zero_detuning_rejected(self, rb87):
        with pytest.raises(ValueError, match="resonant"):
            scattering_rates(1e8, 1e8, 0.0, rb87)

    def test_negative_rabi_rejected(self, rb87):
        with pytest.raises(ValueError, match="omega"):
            scattering_rates(-1.0, 1e8, 1e12, rb87)


class TestDensityMatrix:
    def test_product_plus_elements(self):
        rho = DensityMatrix.product_plus(2)
        np.testing.assert_allclose(rho.elements, np.full((4, 4), 0.25))

    def test_ghz_structure(self):
        rho = DensityMatrix.ghz(3)
        assert rho.elements[0, 0] == pytest.approx(0.5)
        assert rho.elements[7, 7] == pytest.approx(0.5)
        assert rho.elements[0, 7] == pytest.approx(0.5)
        assert rho.elements[1, 1] == 0.0

    def test_rejects_non_hermitian(self):
        m = np.array([[0.5, 0.5], [0.2, 0.5]], dtype=complex)
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix(1, m)

    def test_rejects_bad_trace(self):
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix(1, np.eye(2))

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError, match="shape"):
            DensityMatrix(2, np.eye(2) / 2.0)

    def test_rejects_large_n(self):
        with pytest.raises(ValueError, match="cap"):
            DensityMatrix(13, np.eye(2**13) / 2.0**13)

    def test_elements_read_only(self):
        rho = DensityMatrix.product_plus(1)
        with pytest.raises(ValueError):
            rho.elements[0, 0] = 9.0

    def test_min_eigenvalue_and_overlap(self, random_rho):
        rho = random_rho(2)
        assert rho.min_eigenvalue() > 0.0
        assert rho.overlap_with(rho) == pytest.approx(
            float(np.sum(np.abs(rho.elements) ** 2)), rel=1e-12
        )


class TestLocalChannel:
    def test_identity_at_t0(self, random_rho):
        rho = random_rho(3)
        out = apply_local_dephasing(rho, 1.7, 0.0)
        np.testing.assert_array_equal(out.elements, rho.elements)

    def test_single_atom_half_decay(self):
        rho = DensityMatrix.product_plus(1)
        out = apply_local_dephasing(rho, 1.0, math.log(2.0))
        np.testing.assert_allclose(
            out.elements, np.array([[0.5, 0.25], [0.25, 0.5]]), rtol=1e-12
        )

    def test_two_atom_hamming_weighting(self):
        rho = DensityMatrix.product_plus(2)
        out = apply_local_dephasing(rho, 1.0, math.log(2.0))
        # |gg><ss| has Hamming distance 2: factor (1/2)^2.
        assert out.elements[0, 3].real == pytest.approx(0.25 * 0.25, rel=1e-12)
        # |gg><gs| differs in one atom: factor 1/2.
        assert out.elements[0, 1].real == pytest.approx(0.25 * 0.5, rel=1e-12)
        np.testing.assert_allclose(np.diag(out.elements), 0.25, rtol=1e-12)

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError, match="t must be"):
            apply_local_dephasing(DensityMatrix.product_plus(1), 1.0, -0.1)


class TestCollectiveChannel:
    def test_identity_at_zero_variance(self, random_rho):
        rho = random_rho(3)
        out = apply_collective_dephasing(rho, 0.0)
        np.testing.assert_array_equal(out.elements, rho.elements)

    def test_single_atom_half_decay(self):
        rho = DensityMatrix.product_plus(1)
        out = apply_collective_dephasing(rho, CollectiveNoiseStrength(2.0 * math.log(2.0)))
        assert out.elements[0, 1].real == pytest.approx(0.25, rel=1e-12)

    def test_two_atom_spin_difference_weighting(self):
        rho = DensityMatrix.product_plus(2)
        gamma = 2.0 * math.log(2.0)
        out = apply_collective_dephasing(rho, gamma)
        # |gg> <-> |gs|: S_z difference 2, factor exp(-gamma*4/8) = 1/2.
        assert out.elements[0, 1].real == pytest.approx(0.25 * 0.5, rel=1e-12)
        # |gg> <-> |ss|: S_z difference 4, factor exp(-gamma*16/8) = 1/16.
        assert out.elements[0, 3].real == pytest.approx(0.25 / 16.0, rel=1e-12)
        # Equal-spin coherence |gs> <-> |sg| is untouched.
        assert out.elements[1, 2].real == pytest.approx(0.25, rel=1e-12)

    def test_negative_variance_rejected(self):
        with pytest.raises(ValueError, match="gamma_t"):
            apply_collective_dephasing(DensityMatrix.product_plus(1), -0.5)
        with pytest.raises(ValueError, match="gamma_t"):
            CollectiveNoiseStrength(-1.0)


class TestOverlapSc:
    def test_unity_at_t0(self):
        assert overlap_sc(5, 2.3, 0.0) == 1.0

    def test_single_atom(self):
        assert overlap_sc(1, 1.0, math.log(2.0)) == pytest.approx(0.75, rel=1e-12)

    def test_four_atoms(self):
        assert overlap_sc(4, 1.0, math.log(2.0)) == pytest.approx(0.31640625, rel=1e-12)

    def test_matches_channel_trace(self):
        for n in range(1, 7):
            rho0 = DensityMatrix.product_plus(n)
            rho_t = apply_local_dephasing(rho0, 0.8, 1.1)
            assert rho0.overlap_with(rho_t) == pytest.approx(
                overlap_sc(n, 0.8, 1.1), abs=1e-12
            )


class TestOverlapQgQuadrature:
    def test_unity_at_zero_variance(self):
        assert overlap_qg_quadrature(7, 0.0) == 1.0

    def test_single_atom_closed_form(self):
        gamma = 2.0 * math.log(2.0)
        assert overlap_qg_quadrature(1, gamma) == pytest.approx(0.75, abs=1e-10)
        # General single-atom value: (1 + exp(-gamma/2))/2.
        for gamma in (0.05, 0.7, 4.0):
            assert overlap_qg_quadrature(1, gamma) == pytest.approx(
                (1.0 + math.exp(-gamma / 2.0)) / 2.0, abs=1e-10
            )

    def test_accepts_strength_wrapper(self):
        direct = overlap_qg_quadrature(3, 1.25)
        wrapped = overlap_qg_quadrature(3, CollectiveNoiseStrength(1.25))
        assert direct == wrapped

    def test_against_exact_binomial_sum(self):
        # The binomial Fourier expansion is exact; the quadrature must land
        # within its stated absolute tolerance across the working range.
        for n in (1, 2, 5, 17, 64, 200):
            for gamma in (0.05, 0.5, 3.0, 12.0, 40.0):
                exact = overlap_qg_exact_sum(n, gamma)
                quad = overlap_qg_quadrature(n, gamma)
                assert quad == pytest.approx(exact, abs=1e-10), (n, gamma)

    def test_matches_channel_trace(self):
        for n in range(1, 7):
            rho0 = DensityMatrix.product_plus(n)
            rho_t = apply_collective_dephasing(rho0, 1.6)
            assert rho0.overlap_with(rho_t) == pytest.approx(
                overlap_qg_quadrature(n, 1.6), abs=1e-8
            )

    def test_negative_variance_rejected(self):
        with pytest.raises(ValueError, match="gamma_t"):
            overlap_qg_quadrature(3, -0.1)

    def test_node_budget_exhaustion_raises(self):
        with pytest.raises(RuntimeError, match="max_nodes"):
            overlap_qg_quadrature(10_000, 1000.0, max_nodes=4096)


class TestOverlapQgExactSum:
    def test_unity_at_zero_variance(self):
        assert overlap_qg_exact_sum(9, 0.0) == pytest.approx(1.0, rel=1e-13)

    def test_single_atom_closed_form(self):
        gamma = 1.3
        expected = (1.0 + math.exp(-gamma / 2.0)) / 2.0
        assert overlap_qg_exact_sum(1, gamma) == pytest.approx(expected, rel=1e-13)


class TestOverlapQgAsymptotic:
    def test_frozen_value(self):
        # sqrt(2/(N*gamma)) * theta_3(0, exp(-2 pi^2/gamma)) at N=100, gamma=10;
        # theta_3 = 1.2785670.
        assert overlap_qg_asymptotic(100, 10.0) == pytest.approx(
            5.7179254e-2, rel=1e-6
        )

    def test_quadruple_n_halves_output(self):
        base = overlap_qg_asymptotic(50, 7.0)
        assert overlap_qg_asymptotic(200, 7.0) == pytest.approx(base / 2.0, rel=1e-14)

    def test_zero_variance_rejected(self):
        with pytest.raises(ValueError, match="singular"):
            overlap_qg_asymptotic(100, 0.0)

    def test_matches_exact_sum_deep_in_asymptotic_regime(self):
        exact = overlap_qg_exact_sum(10_000, 1000.0)
        asym = overlap_qg_asymptotic(10_000, 1000.0)
        assert abs(asym - exact) / exact < 0.01

    def test_convergence_improves_with_n(self):
        gamma = 10.0
        devs = []
        for n in (100, 300, 1000):
            exact = overlap_qg_exact_sum(n, gamma)
            devs.append(abs(overlap_qg_asymptotic(n, gamma) - exact) / exact)
        assert devs[0] < 0.02
        assert devs == sorted(devs, reverse=True)


class TestOverlapGhz:
    def test_local_example(self):
        assert overlap_ghz(3, "local", math.log(2.0)) == pytest.approx(0.5625, rel=1e-12)

    def test_collective_example(self):
        assert overlap_ghz(2, "collective", math.log(2.0) / 8.0) == pytest.approx(
            0.75, rel=1e-12
        )

    def test_unity_at_zero(self):
        assert overlap_ghz(5, "local", 0.0) == 1.0
        assert overlap_ghz(5, "collective", 0.0) == 1.0

    def test_unknown_channel_rejected(self):
        with pytest.raises(ValueError, match="channel"):
            overlap_ghz(2, "global", 1.0)

    def test_matches_channel_trace(self):
        n, gamma_sc, t, gamma = 4, 0.9, 0.7, 0.05
        ghz = DensityMatrix.ghz(n)
        local = apply_local_dephasing(ghz, gamma_sc, t)
        assert ghz.overlap_with(local) == pytest.approx(
            overlap_ghz(n, "local", gamma_sc * t), abs=1e-12
        )
        # The GHZ collective form counts phase per unit total spin; the
        # channel counts it per half-spin, hence gamma_channel = 4*gamma.
        coll = apply_collective_dephasing(ghz, 4.0 * gamma)
        assert ghz.overlap_with(coll) == pytest.approx(
            overlap_ghz(n, "collective", gamma), abs=1e-12
        )


class TestLindbladEvolve:
    def test_diagonal_states_are_fixed_points(self, rng):
        diag = rng.random(8)
        diag /= diag.sum()
        rho = DensityMatrix(3, np.diag(diag).astype(complex))
        out = lindblad_evolve(rho, 1.3, lambda t: 0.8, 2.0, 1e-3)
        np.testing.assert_allclose(out.elements, rho.elements, atol=1e-12)

    def test_single_atom_local_decay(self):
        rho = DensityMatrix.product_plus(1)
        out = lindblad_evolve(rho, 1.0, lambda t: 0.0, 1.0, 1e-4)
        expected = apply_local_dephasing(rho, 1.0, 1.0)
        np.testing.assert_allclose(out.elements, expected.elements, atol=1e-8)
        assert out.elements[0, 1].real == pytest.approx(0.5 * math.exp(-1.0), rel=1e-7)

    def test_two_atom_collective_constant_rate(self):
        rho = DensityMatrix.product_plus(2)
        rate = 0.6
        t = 1.4
        out = lindblad_evolve(rho, 0.0, lambda s: rate, t, 1e-4 * t)
        expected = apply_collective_dephasing(rho, 2.0 * rate * t)
        np.testing.assert_allclose(out.elements, expected.elements, atol=1e-8)

    def test_time_dependent_rate_accumulates_variance(self):
        # Gamma_QG(t) = c*t integrates to gamma(t) = c*t^2.
        rho = DensityMatrix.product_plus(2)
        c, t = 0.9, 1.2
        out = lindblad_evolve(rho, 0.0, lambda s: c * s, t, 1e-4 * t)
        expected = apply_collective_dephasing(rho, c * t**2)
        np.testing.assert_allclose(out.elements, expected.elements, atol=1e-8)

    def test_trace_and_hermiticity_preserved(self, random_rho):
        rho = random_rho(3)
        out = lindblad_evolve(rho, 0.7, lambda t: 0.3 + 0.1 * t, 1.0, 1e-3)
        assert float(np.trace(out.elements).real) == pytest.approx(1.0, abs=1e-12)
        assert out.min_eigenvalue() > -1e-10

    def test_invalid_inputs_rejected(self, random_rho):
        rho = random_rho(1)
        with pytest.raises(ValueError, match="dt"):
            lindblad_evolve(rho, 1.0, lambda t: 0.0, 1.0, 0.0)
        with pytest.raises(ValueError, match="t_final"):
            lindblad_evolve(rho, 1.0, lambda t: 0.0, -1.0, 1e-3)
        with pytest.raises(ValueError, match="finite"):
            lindblad_evolve(rho, 1.0, lambda t: -1.0, 1.0, 1e-3)

    def test_large_n_rejected(self):
        rho = DensityMatrix.product_plus(9)
        with pytest.raises(ValueError, match="N <= 8"):
            lindblad_evolve(rho, 1.0, lambda t: 0.0, 1.0, 1e-3)

    def test_zero_duration_returns_copy(self, random_rho):
        rho = random_rho(2)
        out = lindblad_evolve(rho, 1.0, lambda t: 1.0, 0.0, 1e-3)
        np.testing.assert_array_equal(out.elements, rho.elements)


class TestGammaOfT:
    def test_zero_at_start(self):
        profile = TrajectoryProfile(d_max=0.1, ramp_time=0.5, wait_time=0.0)
        assert float(gamma_of_t(profile, 108.9, 0.0)) == 0.0

    def test_plateau_grows_linearly(self):
        profile = TrajectoryProfile(d_max=0.2, ramp_time=0.3, wait_time=1.0)
        g_qg = 50.0
        g1 = float(gamma_of_t(profile, g_qg, 0.3))
        g2 = float(gamma_of_t(profile, g_qg, 0.3 + 0.7))
        # Constant d = d_max on the plateau: the increment is 2*g_qg*d_max^2*dt.
        assert g2 - g1 == pytest.approx(2.0 * g_qg * 0.2**2 * 0.7, rel=1e-9)

    def test_full_trip_closed_form(self):
        from latticedec import ALPHA

        tau = 1.0
        profile = TrajectoryProfile(d_max=0.15, ramp_time=tau / 2.0, wait_time=0.0)
        g_qg = 108.9
        expected = 2.0 * g_qg * ALPHA * 0.15**2 * tau
        assert float(gamma_of_t(profile, g_qg, tau)) == pytest.approx(expected, rel=1e-9)

    def test_outside_domain_rejected(self):
        profile = TrajectoryProfile(d_max=0.1, ramp_time=0.5, wait_time=0.0)
        with pytest.raises(ValueError, match="domain"):
            gamma_of_t(profile, 1.0, 1.5)
        with pytest.raises(ValueError, match="domain"):
            gamma_of_t(profile, 1.0, -0.1)

    def test_monotone_in_time(self):
        profile = TrajectoryProfile(d_max=0.1, ramp_time=0.4, wait_time=0.2)
        values = [float(gamma_of_t(profile, 10.0, t)) for t in np.linspace(0.0, 1.0, 21)]
        assert all(b >= a for a, b in zip(values, values[1:]))


class TestChannelAlgebra:
    def test_channels_commute(self, random_rho):
        for n in (1, 2, 3, 4):
            rho = random_rho(n)
            a = apply_collective_dephasing(apply_local_dephasing(rho, 0.8, 1.0), 0.9)
            b = apply_local_dephasing(apply_collective_dephasing(rho, 0.9), 0.8, 1.0)
            np.testing.assert_allclose(a.elements, b.elements, atol=1e-12)

    def test_semigroup_property(self, random_rho):
        rho = random_rho(3)
        one_shot = apply_local_dephasing(rho, 0.7, 1.9)
        two_step = apply_local_dephasing(apply_local_dephasing(rho, 0.7, 1.2), 0.7, 0.7)
        np.testing.assert_allclose(one_shot.elements, two_step.elements, atol=1e-13)
        one_shot_c = apply_collective_dephasing(rho, 1.1)
        two_step_c = apply_collective_dephasing(apply_collective_dephasing(rho, 0.4), 0.7)
        np.testing.assert_allclose(one_shot_c.elements, two_step_c.elements, atol=1e-13)

    def test_positivity_preserved(self, random_rho):
        rho = random_rho(4)
        out = apply_collective_dephasing(apply_local_dephasing(rho, 1.5, 0.8), 2.0)
        assert out.min_eigenvalue() >= -1e-10

    def test_overlap_monotone_in_time_and_n(self):
        ts = np.linspace(0.0, 4.0, 9)
        for n in (1, 3, 6):
            sc = [overlap_sc(n, 0.8, t) for t in ts]
            qg = [overlap_qg_quadrature(n, 0.9 * t) for t in ts]
            assert all(b <= a for a, b in zip(sc, sc[1:]))
            assert all(b <= a + 1e-12 for a, b in zip(qg, qg[1:]))
        for t in (0.5, 2.0):
            sc_n = [overlap_sc(n, 0.8, t) for n in range(1, 9)]
            qg_n = [overlap_qg_quadrature(n, 0.9 * t) for n in range(1, 9)]
            assert all(b <= a for a, b in zip(sc_n, sc_n[1:]))
            assert all(b <= a + 1e-12 for a, b in zip(qg_n, qg_n[1:]))
