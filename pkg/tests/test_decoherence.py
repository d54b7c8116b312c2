import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from pasts import fock_oracle as fo
from pasts.analytics import normalization, wigner_pasts
from pasts.decoherence import (
    NoFiniteThreshold,
    evolved_wigner,
    omega,
    threshold_added,
    threshold_gap,
    threshold_subtracted,
)
from pasts.states import ChannelSpec, StateSpec, evolved_coefficients
from pasts.validation import bisect_threshold, midpoint_grid, random_phase_points


def bath_gaussian(eta, N):
    return np.exp(-2 * np.abs(eta) ** 2 / (2 * N + 1)) / (math.pi * (2 * N + 1))


class TestEvolvedWigner:
    def test_zero_time_is_the_initial_state(self):
        s = StateSpec(0.3, 0.3, 2)
        pts = random_phase_points()
        np.testing.assert_array_equal(evolved_wigner(pts, s, ChannelSpec(0.2, 0.0)), wigner_pasts(pts, s))

    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_short_time_continuity(self, m):
        s = StateSpec(0.5, 0.2, m)
        pts = random_phase_points()
        diff = np.asarray(evolved_wigner(pts, s, ChannelSpec(0.4, 1e-6))) - wigner_pasts(pts, s)
        assert np.max(np.abs(diff)) < 1e-4

    def test_origin_sign_before_and_after_threshold(self):
        s = StateSpec(0.3, 0.3, 1)
        assert evolved_wigner(0, s, ChannelSpec(0.2, 0.05)) < 0
        assert evolved_wigner(0, s, ChannelSpec(0.2, 0.30)) > 0

    @pytest.mark.parametrize("N", [0.0, 0.2, 2.0])
    def test_relaxes_to_the_bath(self, N):
        pts = random_phase_points()
        w = evolved_wigner(pts, StateSpec(0.8, 0.3, 2), ChannelSpec(N, 12.0))
        np.testing.assert_allclose(w, bath_gaussian(pts, N), atol=1e-9)

    def test_residual_to_the_bath_decays_like_exp_minus_2kt(self):
        pts = random_phase_points()
        s = StateSpec(0.3, 0.3, 1)
        res = [np.max(np.abs(evolved_wigner(pts, s, ChannelSpec(0.2, kt)) - bath_gaussian(pts, 0.2))) for kt in (5, 6)]
        assert res[1] / res[0] == pytest.approx(math.exp(-2), rel=0.05)

    @pytest.mark.parametrize("kt", [0.05, 0.3, 1.0])
    def test_quadrature(self, kt):
        grid, area = midpoint_grid(-6, 6, 241)
        total = evolved_wigner(grid, StateSpec(0.3, 0.3, 2), ChannelSpec(0.2, kt)).sum() * area
        assert total == pytest.approx(0.5, abs=1e-3)

    @pytest.mark.parametrize("kt", [0.05, 0.2, 1.0])
    def test_single_photon_shortcut(self, kt):
        s = StateSpec(0.3, 0.3, 1)
        ch = ChannelSpec(0.2, kt)
        co = evolved_coefficients(s.lam, s.n_c, ch)
        pts = random_phase_points()
        w0 = np.asarray(evolved_wigner(pts, s.with_m(0), ch))
        ref = w0 * (np.abs(omega(pts, co)) ** 2 + co.chi) / normalization(s)
        np.testing.assert_allclose(evolved_wigner(pts, s, ch), ref, rtol=1e-12, atol=1e-15)

    def test_finite_and_smooth_across_threshold(self):
        s = StateSpec(0.3, 0.3, 3)
        kt_c = threshold_added(0.2)
        pts = random_phase_points(5)
        kts = np.linspace(kt_c - 0.01, kt_c + 0.01, 101)
        vals = np.array([evolved_wigner(pts, s, ChannelSpec(0.2, kt)) for kt in kts])
        assert np.all(np.isfinite(vals))
        assert np.max(np.abs(np.diff(vals, 2, axis=0))) < 1e-6
        # exactly at the threshold too
        assert np.all(np.isfinite(evolved_wigner(pts, s, ChannelSpec(0.2, kt_c))))

    @pytest.mark.parametrize("kt", [0.1, 0.5])
    def test_matches_master_equation(self, kt):
        s = StateSpec(0.3, 0.3, 2)
        ch = ChannelSpec(0.2, kt)
        st_ = fo.lindblad_evolve(fo.add_photons(fo.build_sts(s.lam, s.n_c, 60), s.m), ch)
        pts = random_phase_points(6, radius=1.5)
        ora = np.array([fo.wigner_parity(st_, a) for a in pts])
        np.testing.assert_allclose(ora, evolved_wigner(pts, s, ch), rtol=1e-4)


class TestThresholds:
    def test_vacuum_bath(self):
        assert threshold_added(0) == pytest.approx(0.5 * math.log(2))
        assert threshold_added(0) == pytest.approx(0.346574, abs=5e-7)

    def test_warm_bath(self):
        assert threshold_added(0.2) == pytest.approx(0.269498, abs=5e-7)
        assert threshold_added(1e9) < 1e-9

    def test_rejects_negative_bath(self):
        with pytest.raises(ValueError):
            threshold_added(-0.1)

    @pytest.mark.parametrize("N", [0.0, 0.2, 2.0])
    @pytest.mark.parametrize("lam,n_c", [(0.1, 0.1), (0.8, 1.0)])
    def test_bisection_recovers_threshold(self, N, lam, n_c):
        assert bisect_threshold(StateSpec(lam, n_c, 1), N) == pytest.approx(threshold_added(N), abs=1e-10)

    def test_subtracted_zero_when_nc_equals_sinh2(self):
        lam = 0.6
        assert threshold_subtracted(0.3, math.sinh(lam) ** 2, lam) == pytest.approx(0, abs=1e-15)

    def test_subtracted_negative_when_seed_too_hot(self):
        assert threshold_subtracted(0.2, 0.5, 0.3) < 0

    def test_no_finite_threshold(self):
        with pytest.raises(NoFiniteThreshold):
            threshold_subtracted(0.0, 0.5, 0.0)
        with pytest.raises(NoFiniteThreshold):
            threshold_subtracted(0.0, 0.0, 0.0)

    def test_unsqueezed_warm_bath(self):
        N, n_c = 2.0, 0.5
        expected = 0.5 * math.log(1 - (2 * n_c + 1) / (2 * N + 1))
        assert threshold_subtracted(N, n_c, 0.0) == pytest.approx(expected)

    @given(st.floats(0, 3), st.floats(0, 3), st.floats(0, 1.5))
    def test_subtracted_is_shorter(self, N, n_c, lam):
        try:
            kt_cs = threshold_subtracted(N, n_c, lam)
        except NoFiniteThreshold:
            return
        assert kt_cs <= threshold_added(N) + 1e-15

    def test_gap_examples(self):
        assert threshold_gap(0.4, 0.0, 0.7) == pytest.approx(0, abs=1e-14)
        assert threshold_gap(0.2, 0.3, 0.3) > 0

    @given(st.floats(0, 3), st.floats(0.01, 3), st.floats(0.05, 1.5))
    def test_gap_positive(self, N, n_c, lam):
        assume(math.sinh(lam) ** 2 > 0)
        try:
            assert threshold_gap(N, n_c, lam) > 0
        except NoFiniteThreshold:
            pass

    def test_subtracted_threshold_is_an_origin_sign_change(self):
        # a^ rho a photon subtraction, evolved numerically, loses negativity at kt_cs
        lam, n_c, N = 0.8, 0.1, 0.2
        kt_cs = threshold_subtracted(N, n_c, lam)
        st_ = fo.subtract_photons(fo.build_sts(lam, n_c, 80), 1)
        before = fo.lindblad_evolve(st_, ChannelSpec(N, 0.97 * kt_cs))
        after = fo.lindblad_evolve(before, ChannelSpec(N, 0.06 * kt_cs))
        assert fo.wigner_parity(before, 0) < 0 < fo.wigner_parity(after, 0)


def test_omega_is_finite_at_threshold():
    kt_c = threshold_added(0.0)
    co = evolved_coefficients(0.3, 0.2, ChannelSpec(0.0, kt_c))
    assert np.all(np.isfinite(omega(np.array([0.3 + 0.2j, -1j]), co)))
