import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.special import eval_hermite, eval_legendre

from pasts.kernels import (
    bilinear_hermite_sum,
    falling_factorial,
    hermite,
    laguerre,
    scaled_hermite,
    scaled_hermite_sequence,
    scaled_legendre,
    scaled_legendre_sequence,
)

finite = st.floats(-3, 3, allow_nan=False)


def legendre_by_sum(m, x, y):
    # y^{m/2} P_m(x / sqrt y) expanded as a polynomial in x and y
    return sum(
        (-1) ** k * math.comb(m, k) * math.comb(2 * m - 2 * k, m) * x ** (m - 2 * k) * y**k
        for k in range(m // 2 + 1)
    ) / 2**m


def hermite_by_sum(k, u, d):
    return sum(
        (-1) ** j * math.factorial(k) / (math.factorial(j) * math.factorial(k - 2 * j)) * u ** (k - 2 * j) * d**j
        for j in range(k // 2 + 1)
    )


def bilinear_by_taylor(m, d, chi, u):
    """(m!)^2 times the s^m t^m coefficient of exp[d(s^2+t^2) + chi s t + u t + conj(u) s]."""
    deg = m + 1
    X = np.zeros((deg, deg), dtype=complex)  # X[i, j] multiplies s^i t^j
    if deg > 2:
        X[2, 0] = X[0, 2] = d
    if deg > 1:
        X[1, 1] = chi
        X[0, 1] = u
        X[1, 0] = np.conj(u)

    def mul(a, b):
        out = np.zeros_like(a)
        for i in range(deg):
            for j in range(deg):
                if a[i, j] != 0:
                    out[i:, j:] += a[i, j] * b[: deg - i, : deg - j]
        return out

    total = np.zeros_like(X)
    total[0, 0] = 1
    term = total.copy()
    for n in range(1, 2 * m + 1):
        term = mul(term, X) / n
        total += term
    return (math.factorial(m) ** 2 * total[m, m]).real


class TestScaledLegendre:
    def test_examples(self):
        assert scaled_legendre(0, 3.7, -2.0) == 1
        assert scaled_legendre(1, 0.42, -9.0) == 0.42
        assert scaled_legendre(2, 2, 1) == pytest.approx(5.5, rel=1e-15)

    @given(st.integers(0, 12), finite, finite)
    def test_matches_explicit_sum_for_any_sign_of_y(self, m, x, y):
        ref = legendre_by_sum(m, x, y)
        scale = sum(abs(x) ** (m - 2 * k) * abs(y) ** k for k in range(m // 2 + 1)) * 2**m
        assert abs(scaled_legendre(m, x, y) - ref) <= 1e-12 * max(scale, 1)

    def test_scaling_relation(self, rng):
        for m in range(11):
            x = rng.uniform(-2, 2, 30)
            y = rng.uniform(0.1, 3, 30)
            ref = y ** (m / 2) * eval_legendre(m, x / np.sqrt(y))
            err = np.abs(scaled_legendre(m, x, y) - ref)
            assert np.all(err <= 1e-10 * np.maximum(np.abs(ref), y ** (m / 2)))

    def test_sequence_agrees_with_single(self):
        seq = scaled_legendre_sequence(6, 1.3, -0.4)
        assert seq.shape == (7,)
        for m in range(7):
            assert seq[m] == pytest.approx(scaled_legendre(m, 1.3, -0.4), rel=1e-14)

    def test_broadcasts(self):
        x = np.linspace(-1, 1, 5)
        assert np.shape(scaled_legendre(3, x, 0.5)) == (5,)

    @pytest.mark.parametrize("bad", [-1, 1.5, "2"])
    def test_rejects_bad_order(self, bad):
        with pytest.raises(ValueError):
            scaled_legendre(bad, 1.0, 1.0)


class TestScaledHermite:
    def test_examples(self):
        assert scaled_hermite(0, 1 + 2j, 5) == 1
        assert scaled_hermite(1, 0.3 - 0.1j, 7.0) == 0.3 - 0.1j
        # u / (2 sqrt d) = 2 here, so the value is H_3(2) / 8 = u^3 - 6 u d
        assert scaled_hermite(3, 2, 0.25) == pytest.approx(5.0, rel=1e-14)
        assert scaled_hermite(3, 1, 0.25) == pytest.approx(-0.5, rel=1e-14)

    @given(st.integers(0, 12), finite, finite, finite)
    def test_matches_explicit_sum_including_nonpositive_d(self, k, ur, ui, d):
        u = complex(ur, ui)
        ref = hermite_by_sum(k, u, d)
        scale = sum(abs(u) ** (k - 2 * j) * abs(d) ** j for j in range(k // 2 + 1)) * 2**k * math.factorial(k)
        assert abs(scaled_hermite(k, u, d) - ref) <= 1e-12 * max(scale, 1)

    def test_zero_d_is_a_power(self):
        assert scaled_hermite(5, 1.5, 0.0) == pytest.approx(1.5**5)

    def test_sequence_shape_and_dtype(self):
        seq = scaled_hermite_sequence(4, np.array([1j, 2.0]), 0.3)
        assert seq.shape == (5, 2)
        assert np.iscomplexobj(seq)


class TestHermiteLaguerre:
    def test_examples(self):
        assert hermite(0, 1.7) == 1
        assert hermite(2, 0) == -2
        assert laguerre(0, 4.2) == 1
        assert laguerre(1, 0) == 1
        assert laguerre(2, 2) == pytest.approx(-1)

    def test_against_scipy(self):
        z = np.linspace(-2, 2, 17)
        for n in range(12):
            np.testing.assert_allclose(hermite(n, z), eval_hermite(n, z), rtol=1e-12, atol=1e-9)

    def test_consistent_with_scaled_form(self, rng):
        z = rng.normal(size=10) + 1j * rng.normal(size=10)
        for n in range(9):
            np.testing.assert_allclose(hermite(n, z), scaled_hermite(n, 2 * z, 1.0), rtol=1e-12)

    def test_derivative_relation(self, rng):
        z = rng.uniform(-1.5, 1.5, 20)
        h = 1e-6
        for n in range(1, 11):
            fd = (hermite(n, z + h) - hermite(n, z - h)) / (2 * h)
            np.testing.assert_allclose(fd, 2 * n * hermite(n - 1, z), rtol=1e-5, atol=1e-5)


class TestBilinearSum:
    def test_trivial_orders(self):
        assert bilinear_hermite_sum(0, 0.3, -1.2, 2 + 1j) == 1
        u = 0.7 - 0.4j
        assert bilinear_hermite_sum(1, 0.3, -1.2, u) == pytest.approx(abs(u) ** 2 - 1.2)

    @pytest.mark.parametrize("m", range(7))
    def test_is_the_mixed_derivative_of_the_generating_function(self, m, rng):
        for _ in range(5):
            d, chi = rng.uniform(-1.5, 1.5, 2)
            u = complex(*rng.normal(size=2))
            ref = bilinear_by_taylor(m, d, chi, u)
            assert bilinear_hermite_sum(m, d, chi, u) == pytest.approx(ref, rel=1e-10, abs=1e-10)

    def test_diagonal_reduces_to_legendre(self, rng):
        for m in range(9):
            for d, chi in rng.uniform(-2, 2, (10, 2)):
                ref = math.factorial(m) * scaled_legendre(m, chi, chi**2 - 4 * d**2)
                assert bilinear_hermite_sum(m, d, chi, 0.0) == pytest.approx(ref, rel=1e-12, abs=1e-12)

    def test_vectorized_over_u(self):
        u = np.array([0.1, 1j, -0.5 + 0.5j])
        vals = bilinear_hermite_sum(3, 0.2, -0.9, u)
        assert vals.shape == (3,)
        for ui, v in zip(u, vals):
            assert bilinear_hermite_sum(3, 0.2, -0.9, ui) == pytest.approx(v)
        assert np.isrealobj(vals)


def test_falling_factorial_exact_and_large():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(3, 5) == 0
    big = falling_factorial(60, 4)
    assert big == pytest.approx(60 * 59 * 58 * 57, rel=1e-12)
