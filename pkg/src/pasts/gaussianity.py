"""Reference-overlap fidelity between the photon-added state and its seed.

The fidelity here is ``tr(rho_s rho) / tr(rho_s^2)``, an overlap normalized by
the seed purity. It is a non-Gaussianity proxy, *not* the Uhlmann fidelity.
"""

from __future__ import annotations

import math

from .analytics import normalization
from .kernels import scaled_legendre
from .states import StateSpec, fidelity_coefficients

__all__ = [
    "purity_sts",
    "fidelity",
    "subtracted_normalization",
    "subtracted_fidelity",
    "fidelity_ratio",
]


def purity_sts(n_c: float) -> float:
    if n_c < 0:
        raise ValueError(f"thermal mean photon number must be >= 0, got {n_c}")
    return 1.0 / (2 * n_c + 1)


def fidelity(spec: StateSpec) -> float:
    """Reference-overlap fidelity, ``m! S_m(K1, K2) / C_{a,m}``; equals 1 only for ``m = 0``."""
    fc = fidelity_coefficients(spec.lam, spec.n_c)
    return math.factorial(spec.m) * scaled_legendre(spec.m, fc.K1, fc.K2) / normalization(spec)


def subtracted_normalization(spec: StateSpec) -> float:
    """``C_{s,m} = tr(a^m rho_s a†^m) = m! S_m(H, Z)``."""
    fc = fidelity_coefficients(spec.lam, spec.n_c)
    return math.factorial(spec.m) * scaled_legendre(spec.m, fc.H, fc.Z)


def subtracted_fidelity(spec: StateSpec) -> float:
    """Same overlap measure for the ``m``-photon-subtracted state."""
    fc = fidelity_coefficients(spec.lam, spec.n_c)
    return math.factorial(spec.m) * scaled_legendre(spec.m, fc.K1, fc.K2) / subtracted_normalization(spec)


def fidelity_ratio(spec: StateSpec) -> float:
    """Added-over-subtracted fidelity ratio, ``C_{s,m} / C_{a,m}``."""
    return subtracted_normalization(spec) / normalization(spec)
