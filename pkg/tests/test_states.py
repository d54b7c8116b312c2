import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pasts.states import (
    ChannelSpec,
    PhasePoint,
    StateSpec,
    evolved_coefficients,
    fidelity_coefficients,
    sts_coefficients,
    wigner_coefficients,
)

lams = st.floats(0, 2)
ncs = st.floats(0, 5)


class TestSpecs:
    def test_valid(self):
        s = StateSpec(0.3, 0.1, 2)
        assert s.with_m(0) == StateSpec(0.3, 0.1, 0)

    @pytest.mark.parametrize(
        "args", [(-0.1, 0, 0), (0, -1, 0), (0, 0, -1), (0, 0, 1.5), (math.nan, 0, 0), (0, math.inf, 0)]
    )
    def test_invalid_state(self, args):
        with pytest.raises(ValueError):
            StateSpec(*args)

    @pytest.mark.parametrize("args", [(-1, 0.1), (0, -0.1), (math.nan, 1)])
    def test_invalid_channel(self, args):
        with pytest.raises(ValueError):
            ChannelSpec(*args)

    def test_phase_point_round_trip(self):
        p = PhasePoint.from_complex(0.25 - 1.5j)
        assert complex(p) == 0.25 - 1.5j
        assert (p.re, p.im) == (0.25, -1.5)


class TestStsCoefficients:
    def test_vacuum(self):
        co = sts_coefficients(0, 0)
        assert (co.A, co.B, co.C, co.B_bar, co.D) == pytest.approx((1, 0, 0, 1, 0))

    @pytest.mark.parametrize("n_c", [0.2, 1.0, 3.0])
    def test_unsqueezed(self, n_c):
        co = sts_coefficients(0, n_c)
        assert co.A == pytest.approx((n_c + 1) ** 2)
        assert co.D == pytest.approx(n_c**2 / (n_c + 1) ** 2)

    def test_reference_point(self):
        co = sts_coefficients(0.3, 1)
        assert co.A == pytest.approx(4.278198, abs=5e-7)
        assert co.B_bar == pytest.approx(2.278198, abs=5e-7)
        assert co.D == pytest.approx(0.168716, abs=5e-7)

    @given(lams, ncs)
    def test_identities(self, lam, n_c):
        co = sts_coefficients(lam, n_c)
        assert co.A > 0
        assert co.D == pytest.approx(co.B**2 - co.C**2, abs=1e-12)
        assert co.B_bar == pytest.approx(co.A - n_c * (n_c + 1), rel=1e-12)
        assert co.tau1_sq * co.tau2_sq == pytest.approx(co.A, rel=1e-12)

    def test_d_goes_negative_at_strong_squeezing(self):
        assert sts_coefficients(1.2, 0.0).D < 0
        assert sts_coefficients(0.3, 1.0).D > 0


class TestWignerCoefficients:
    @given(lams, ncs)
    def test_a4_minus_a3(self, lam, n_c):
        wc = wigner_coefficients(lam, n_c)
        assert wc.A4 - wc.A3 == pytest.approx(1, abs=1e-12)
        assert wc.A1 == pytest.approx(sts_coefficients(lam, n_c).A / (2 * n_c + 1) ** 2, rel=1e-12)

    def test_no_squeezing_means_no_a2(self):
        assert wigner_coefficients(0, 0.7).A2 == 0


class TestEvolvedCoefficients:
    def test_rejects_zero_time(self):
        with pytest.raises(ValueError):
            evolved_coefficients(0.3, 0.3, ChannelSpec(0.2, 0.0))

    @pytest.mark.parametrize("lam,n_c,N", [(0.3, 0.3, 0.2), (0.8, 0.0, 1.0), (0.0, 0.5, 0.0)])
    def test_short_time_limits(self, lam, n_c, N):
        co = evolved_coefficients(lam, n_c, ChannelSpec(N, 1e-6))
        assert co.Delta2 == pytest.approx(math.sinh(2 * lam) / (4 * (2 * n_c + 1)), abs=1e-4)
        assert co.chi == pytest.approx(-(math.cosh(lam) ** 2 + n_c) / (2 * n_c + 1), abs=1e-4)
        assert (2 * N + 1) * co.T * math.sqrt(co.G) == pytest.approx(2, abs=1e-4)

    @pytest.mark.parametrize("lam,n_c,N", [(0.3, 0.3, 0.2), (0.8, 0.1, 2.0)])
    def test_long_time_limits(self, lam, n_c, N):
        co = evolved_coefficients(lam, n_c, ChannelSpec(N, 30.0))
        assert co.Delta2 == pytest.approx((2 * n_c + 1) * math.sinh(2 * lam) / 4, rel=1e-9)
        assert co.chi == pytest.approx(n_c * math.cosh(2 * lam) + math.cosh(lam) ** 2, rel=1e-9)

    def test_reference_point_is_finite(self):
        co = evolved_coefficients(0.3, 0.3, ChannelSpec(0.2, 0.05))
        assert all(math.isfinite(v) for v in vars(co).values())
        assert co.G > 0

    @given(lams, ncs, st.floats(0, 5), st.floats(1e-6, 10))
    def test_G_positive(self, lam, n_c, N, kt):
        assert evolved_coefficients(lam, n_c, ChannelSpec(N, kt)).G > 0

    @pytest.mark.parametrize("N", [0.0, 0.2, 2.0])
    def test_delta2_vanishes_at_threshold(self, N):
        kt_c = 0.5 * math.log((2 * N + 2) / (2 * N + 1))
        co = evolved_coefficients(0.4, 0.3, ChannelSpec(N, kt_c))
        assert abs(co.Delta2) < 1e-12
        assert co.g3 * co.e_kt == pytest.approx(2, rel=1e-12)


class TestFidelityCoefficients:
    @given(lams, ncs)
    def test_k2_identity(self, lam, n_c):
        fc = fidelity_coefficients(lam, n_c)
        assert fc.K2 == pytest.approx(fc.K1**2 - 4 * fc.K0**2, abs=1e-12 * max(1, fc.K1**2))

    def test_h_is_subtracted_mean(self):
        lam, n_c = 0.3, 1.0
        fc = fidelity_coefficients(lam, n_c)
        assert fc.H == pytest.approx(n_c * math.cosh(2 * lam) + math.sinh(lam) ** 2)

    def test_k2_can_be_negative(self):
        assert np.any([fidelity_coefficients(l, 0.0).K2 < 0 for l in (0.5, 1.0, 1.5)])
