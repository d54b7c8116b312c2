"""Closed-form normalization, photon statistics and Wigner functions.

Wigner functions follow the convention in which the vacuum is
``exp(-2|alpha|^2) / pi``, so that they integrate to 1/2 over ``d^2 alpha``
(equivalently to 1 over ``dq dp`` with ``q = sqrt(2) Re alpha``). Multiply by
2 to obtain the more common unit-normalized convention.
"""

from __future__ import annotations

import math

import numpy as np

from .kernels import (
    bilinear_hermite_sum,
    falling_factorial,
    laguerre,
    scaled_legendre,
    scaled_legendre_sequence,
)
from .states import PhasePoint, StateSpec, sts_coefficients, wigner_coefficients

__all__ = [
    "ConsistencyError",
    "UndefinedMomentError",
    "as_alpha",
    "normalization",
    "mean_photon",
    "second_factorial_moment",
    "mandel_q",
    "pnd_sts",
    "pnd_pasts",
    "pnd_pasts_distribution",
    "wigner_sts",
    "wigner_pasts",
    "wigner_thermal_added",
]

PND_TAIL = 1e-16
PND_HARD_CAP = 4000
_NEG_RAISE = -1e-9


class ConsistencyError(RuntimeError):
    """A probability came out clearly negative; indicates a bug, not rounding."""


class UndefinedMomentError(ZeroDivisionError):
    pass


def as_alpha(p):
    """Accept a :class:`PhasePoint`, a complex scalar or a complex array."""
    if isinstance(p, PhasePoint):
        return complex(p)
    return np.asarray(p, dtype=complex)


def _scalar(x):
    return x.item() if isinstance(x, np.ndarray) and x.ndim == 0 else x


def normalization(spec: StateSpec) -> float:
    """``C_{a,m} = tr(a†^m rho_s a^m) = m! S_m(B_bar, A)``."""
    co = sts_coefficients(spec.lam, spec.n_c)
    return math.factorial(spec.m) * scaled_legendre(spec.m, co.B_bar, co.A)


def _normalization_ratios(spec: StateSpec) -> tuple[float, float]:
    co = sts_coefficients(spec.lam, spec.n_c)
    m = spec.m
    s = scaled_legendre_sequence(m + 2, co.B_bar, co.A)
    # C_{m+1}/C_m and C_{m+2}/C_m without forming the factorials
    return (m + 1) * s[m + 1] / s[m], (m + 1) * (m + 2) * s[m + 2] / s[m]


def mean_photon(spec: StateSpec) -> float:
    r1, _ = _normalization_ratios(spec)
    return max(r1 - 1.0, 0.0)


def second_factorial_moment(spec: StateSpec) -> float:
    """``<a†² a²>`` of the photon-added state."""
    r1, r2 = _normalization_ratios(spec)
    return max(r2 - 4 * r1 + 2.0, 0.0)


def mandel_q(spec: StateSpec) -> float:
    """Mandel ``Q = <a†²a²>/<a†a> - <a†a>``; negative means sub-Poissonian."""
    n = mean_photon(spec)
    if n <= 0:
        raise UndefinedMomentError("Mandel Q is undefined for the vacuum (zero mean photon number)")
    return second_factorial_moment(spec) / n - n


def _clamp(p: np.ndarray) -> np.ndarray:
    if np.any(p < _NEG_RAISE):
        raise ConsistencyError(f"negative probability {p.min():.3e} in photon-number distribution")
    return np.where(p < 0, 0.0, p)


def pnd_sts(n: int, lam: float, n_c: float) -> float:
    """Photon-number distribution of the squeezed thermal state, ``S_n(B, D)/sqrt(A)``."""
    co = sts_coefficients(lam, n_c)
    p = np.asarray(scaled_legendre(n, co.B, co.D) / math.sqrt(co.A))
    return float(_clamp(p))


def pnd_pasts(n: int, spec: StateSpec) -> float:
    m = spec.m
    if n < 0:
        raise ValueError(f"photon number must be >= 0, got {n}")
    if n < m:
        return 0.0
    co = sts_coefficients(spec.lam, spec.n_c)
    p = (
        falling_factorial(n, m)
        * scaled_legendre(n - m, co.B, co.D)
        / (normalization(spec) * math.sqrt(co.A))
    )
    return float(_clamp(np.asarray(p)))


def pnd_pasts_distribution(spec: StateSpec, n_max: int | None = None) -> np.ndarray:
    """Return ``P(0), ..., P(n_max)``.

    Without ``n_max`` the cutoff is adaptive: the sequence grows past its
    peak until two successive terms drop below 1e-16, with a hard cap of 4000.
    """
    co = sts_coefficients(spec.lam, spec.n_c)
    m = spec.m
    scale = 1.0 / (normalization(spec) * math.sqrt(co.A))
    if n_max is not None:
        if n_max < m:
            return np.zeros(n_max + 1)
        seq = scaled_legendre_sequence(n_max - m, co.B, co.D)
        return _clamp(np.concatenate([np.zeros(m), _added(seq, m) * scale]))

    chunk = 256
    length = chunk
    while True:
        seq = scaled_legendre_sequence(length - 1, co.B, co.D)
        p = _added(seq, m) * scale
        peak = int(np.argmax(p))
        # two in a row: pure squeezed vacuum has exact zeros at every odd n
        small = p < PND_TAIL
        below = np.nonzero(small[:-1] & small[1:] & (np.arange(len(p) - 1) > peak))[0]
        if below.size:
            p = p[: below[0] + 2]
            break
        if length + m >= PND_HARD_CAP:
            p = p[: PND_HARD_CAP - m + 1]
            break
        length = min(2 * length, PND_HARD_CAP - m + 1)
    return _clamp(np.concatenate([np.zeros(m), p]))


def _added(seq: np.ndarray, m: int) -> np.ndarray:
    # seq[k] = S_k(B, D); weight k -> n = k + m by n!/k!
    k = np.arange(len(seq))
    weight = np.ones(len(seq))
    for j in range(1, m + 1):
        weight *= k + j
    return weight * seq


def wigner_sts(p, lam: float, n_c: float):
    """Gaussian Wigner function of the squeezed thermal state."""
    spec = StateSpec(lam, n_c)
    alpha = as_alpha(p)
    two_n1 = 2 * spec.n_c + 1
    a2 = alpha * alpha
    expo = (
        -2 * math.cosh(2 * spec.lam) * (alpha * np.conj(alpha)).real
        + math.sinh(2 * spec.lam) * 2 * a2.real
    ) / two_n1
    return _scalar(np.exp(expo) / (math.pi * two_n1))


def wigner_pasts(p, spec: StateSpec):
    """Wigner function of the ``m``-photon-added squeezed thermal state.

    Evaluated as ``F_m * W_0`` with the non-Gaussian factor taken from the
    kernel ``bilinear_hermite_sum(m, A2/4, -A4/2, A2 alpha* - A4 alpha)``,
    which has no ``1/sinh(2 lambda)`` singularity at zero squeezing.
    """
    alpha = as_alpha(p)
    w0 = np.asarray(wigner_sts(alpha, spec.lam, spec.n_c))
    if spec.m == 0:
        return _scalar(w0)
    wc = wigner_coefficients(spec.lam, spec.n_c)
    u = wc.A2 * np.conj(alpha) - wc.A4 * alpha
    f = np.asarray(bilinear_hermite_sum(spec.m, wc.A2 / 4, -wc.A4 / 2, u)) / normalization(spec)
    return _scalar(f * w0)


def wigner_thermal_added(p, n_c: float, m: int):
    """Laguerre-Gaussian Wigner function of the ``m``-photon-added thermal state."""
    spec = StateSpec(0.0, n_c, m)
    alpha = as_alpha(p)
    two_n1 = 2 * spec.n_c + 1
    r2 = np.abs(alpha) ** 2
    w = (
        (-1) ** m
        * np.exp(-2 * r2 / two_n1)
        / (math.pi * two_n1 ** (m + 1))
        * laguerre(m, 4 * (spec.n_c + 1) * r2 / two_n1)
    )
    return _scalar(w)
