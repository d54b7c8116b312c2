"""Wigner function in the thermal channel and negativity thresholds."""

from __future__ import annotations

import math

import numpy as np

from .analytics import as_alpha, normalization, wigner_pasts
from .kernels import bilinear_hermite_sum
from .states import ChannelSpec, EvolvedCoefficients, StateSpec, evolved_coefficients

__all__ = [
    "KT_EPSILON",
    "NoFiniteThreshold",
    "omega",
    "evolved_wigner",
    "threshold_added",
    "threshold_subtracted",
    "threshold_gap",
]

KT_EPSILON = 1e-9


class NoFiniteThreshold(ValueError):
    """The logarithm defining the threshold has a non-positive argument."""


def omega(eta, co: EvolvedCoefficients):
    """Point-dependent kernel argument.

    Written with the ``(g3 e^-kt - 2)`` factor already cancelled against the
    ones carried by ``Delta2`` and ``chi``, so it stays finite where that
    factor vanishes (at the single-photon threshold).
    """
    eta = np.asarray(eta, dtype=complex)
    P = 2 * co.g0 + co.g3 * co.e_kt
    return co.g3 / co.G * (
        co.g2 * (co.g3 * co.e_kt - 2) * np.conj(eta) - 2 * (co.g1 * P - co.g2**2) * eta
    )


def evolved_wigner(p, spec: StateSpec, channel: ChannelSpec):
    """Wigner function of the photon-added state after decay time ``channel.kt``.

    Below ``kt = 1e-9`` the initial-state closed form is returned.
    """
    if channel.kt <= KT_EPSILON:
        return wigner_pasts(p, spec)
    eta = as_alpha(p)
    co = evolved_coefficients(spec.lam, spec.n_c, channel)
    two_n1 = 2 * spec.n_c + 1
    prefactor = (2 / two_n1) / (
        math.pi * (2 * channel.bath_mean + 1) * co.T * math.sqrt(co.G)
    )
    expo = -co.Delta1 * np.abs(eta) ** 2 + co.g2 * co.g3**2 / co.G * 2 * (eta * eta).real
    w0 = prefactor * np.exp(expo)
    if spec.m > 0:
        f = bilinear_hermite_sum(spec.m, co.Delta2, co.chi, omega(eta, co)) / normalization(spec)
        w0 = w0 * f
    w0 = np.asarray(w0)
    return w0.item() if w0.ndim == 0 else w0


def threshold_added(N: float) -> float:
    """Decay time at which the single-photon-added state loses origin negativity.

    Independent of the squeezing and of the seed temperature.
    """
    if N < 0:
        raise ValueError(f"bath mean photon number must be >= 0, got {N}")
    return 0.5 * math.log((2 * N + 2) / (2 * N + 1))


def threshold_subtracted(N: float, n_c: float, lam: float) -> float:
    """Matching threshold for the single-photon-subtracted squeezed thermal state.

    A negative result means the subtracted state has no origin negativity even
    at ``kt = 0`` (this happens when ``n_c > sinh(lam)**2``). Raises
    :class:`NoFiniteThreshold` when the logarithm's argument is not positive.
    """
    StateSpec(lam, n_c)
    if N < 0:
        raise ValueError(f"bath mean photon number must be >= 0, got {N}")
    sh2 = math.sinh(lam) ** 2
    H = n_c * math.cosh(2 * lam) + sh2
    if H == 0:
        raise NoFiniteThreshold("no finite threshold: vacuum seed has nothing to subtract")
    arg = 1 - (2 * n_c + 1) / (2 * N + 1) * (n_c - sh2) / H
    if arg <= 0:
        raise NoFiniteThreshold(f"no finite threshold (log argument {arg:.6g} <= 0)")
    return 0.5 * math.log(arg)


def threshold_gap(N: float, n_c: float, lam: float) -> float:
    """``exp(2 kt_c) - exp(2 kt_cs)``, checked against its closed form."""
    kt_c = threshold_added(N)
    kt_cs = threshold_subtracted(N, n_c, lam)
    gap = math.exp(2 * kt_c) - math.exp(2 * kt_cs)
    closed = 2 * n_c * (n_c + 1) / (
        (2 * N + 1) * (n_c * math.cosh(2 * lam) + math.sinh(lam) ** 2)
    )
    if not math.isclose(gap, closed, rel_tol=1e-12, abs_tol=1e-12):
        raise ArithmeticError(f"threshold gap {gap!r} disagrees with closed form {closed!r}")
    return gap
