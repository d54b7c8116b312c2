"""Parameter types and the coefficient sets shared by the closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "StateSpec",
    "ChannelSpec",
    "PhasePoint",
    "StsCoefficients",
    "WignerCoefficients",
    "EvolvedCoefficients",
    "FidelityCoefficients",
    "sts_coefficients",
    "wigner_coefficients",
    "evolved_coefficients",
    "fidelity_coefficients",
]


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class StateSpec:
    """A photon-added squeezed thermal state.

    Attributes:
        lam: squeeze parameter (``lambda``, also written ``r``), >= 0.
        n_c: mean photon number of the thermal seed, >= 0.
        m: number of added photons.
    """

    lam: float
    n_c: float
    m: int = 0

    def __post_init__(self):
        lam = _finite("lambda", self.lam)
        n_c = _finite("n_c", self.n_c)
        if lam < 0:
            raise ValueError(f"squeeze parameter must be >= 0, got {lam}")
        if n_c < 0:
            raise ValueError(f"thermal mean photon number must be >= 0, got {n_c}")
        if isinstance(self.m, bool) or int(self.m) != self.m or self.m < 0:
            raise ValueError(f"added photon number must be a non-negative integer, got {self.m!r}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "n_c", n_c)
        object.__setattr__(self, "m", int(self.m))

    def with_m(self, m: int) -> "StateSpec":
        return StateSpec(self.lam, self.n_c, m)


@dataclass(frozen=True)
class ChannelSpec:
    """Thermal bath with mean photon number ``bath_mean`` after decay time ``kt``."""

    bath_mean: float
    kt: float

    def __post_init__(self):
        N = _finite("bath mean", self.bath_mean)
        kt = _finite("kt", self.kt)
        if N < 0:
            raise ValueError(f"bath mean photon number must be >= 0, got {N}")
        if kt < 0:
            raise ValueError(f"decay time kt must be >= 0, got {kt}")
        object.__setattr__(self, "bath_mean", N)
        object.__setattr__(self, "kt", kt)


@dataclass(frozen=True)
class PhasePoint:
    """Phase-space coordinate ``alpha = re + i im``."""

    re: float
    im: float

    def __post_init__(self):
        object.__setattr__(self, "re", _finite("re", self.re))
        object.__setattr__(self, "im", _finite("im", self.im))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, alpha: complex) -> "PhasePoint":
        return cls(alpha.real, alpha.imag)


@dataclass(frozen=True)
class StsCoefficients:
    """Normal-order coefficients of the squeezed thermal state.

    ``rho_s = A**-1/2 :exp[C/2 (a†² + a²) + (B - 1) a†a]:``; ``B_bar`` and
    ``A`` feed the normalization kernel, ``B`` and ``D`` the photon-number
    distribution. ``tau1_sq * tau2_sq == A``.
    """

    A: float
    B: float
    C: float
    B_bar: float
    D: float
    tau1_sq: float
    tau2_sq: float


@dataclass(frozen=True)
class WignerCoefficients:
    A1: float
    A2: float
    A3: float
    A4: float


@dataclass(frozen=True)
class EvolvedCoefficients:
    """Per-(state, channel) coefficients of the evolved Wigner function.

    ``e_kt`` is ``exp(-kt)``; the point-dependent ``omega`` is built by
    :func:`pasts.decoherence.omega`.
    """

    g0: float
    g1: float
    g2: float
    g3: float
    G: float
    Delta1: float
    Delta2: float
    chi: float
    e_kt: float
    T: float


@dataclass(frozen=True)
class FidelityCoefficients:
    K0: float
    K1: float
    K2: float
    Z: float
    H: float


def sts_coefficients(lam: float, n_c: float) -> StsCoefficients:
    spec = StateSpec(lam, n_c)
    lam, n_c = spec.lam, spec.n_c
    ch2 = math.cosh(lam) ** 2
    sh2 = math.sinh(lam) ** 2
    two_n1 = 2 * n_c + 1
    A = n_c**2 + two_n1 * ch2
    B = n_c * (n_c + 1) / A
    C = two_n1 * math.sinh(2 * lam) / (2 * A)
    D = (n_c**2 - two_n1 * sh2) / A
    B_bar = n_c * math.cosh(2 * lam) + ch2
    tau1_sq = (two_n1 * math.exp(2 * lam) + 1) / 2
    tau2_sq = (two_n1 * math.exp(-2 * lam) + 1) / 2
    return StsCoefficients(A, B, C, B_bar, D, tau1_sq, tau2_sq)


def wigner_coefficients(lam: float, n_c: float) -> WignerCoefficients:
    spec = StateSpec(lam, n_c)
    lam, n_c = spec.lam, spec.n_c
    two_n1 = 2 * n_c + 1
    A = n_c**2 + two_n1 * math.cosh(lam) ** 2
    A3 = math.cosh(2 * lam) / two_n1
    return WignerCoefficients(
        A1=A / two_n1**2,
        A2=math.sinh(2 * lam) / two_n1,
        A3=A3,
        A4=A3 + 1.0,
    )


def evolved_coefficients(lam: float, n_c: float, channel: ChannelSpec) -> EvolvedCoefficients:
    """Coefficients of the Wigner function after ``channel.kt`` in the thermal bath.

    Raises ``ValueError`` for ``kt <= 0``; the initial state has its own
    closed form (see :func:`pasts.analytics.wigner_pasts`).
    """
    if channel.kt <= 0:
        raise ValueError("evolved coefficients need kt > 0; use the initial-state Wigner function")
    wc = wigner_coefficients(lam, n_c)
    two_n1 = 2 * n_c + 1
    g0, g1, g2 = wc.A3, wc.A4 / 2, wc.A2
    e = math.exp(-channel.kt)
    T = -math.expm1(-2 * channel.kt)
    g3 = 2 * e / ((2 * channel.bath_mean + 1) * T)
    P = 2 * g0 + g3 * e
    G = P**2 - 4 * g2**2
    Delta1 = g3 / e - g3**2 * P / G
    Delta2 = g2 / G * (g3 * e / 2 - 1) ** 2
    chi = (2 - g3 * e) / G * (g0 + g1 * g3 * e + 1 / two_n1**2)
    return EvolvedCoefficients(g0, g1, g2, g3, G, Delta1, Delta2, chi, e, T)


def fidelity_coefficients(lam: float, n_c: float) -> FidelityCoefficients:
    spec = StateSpec(lam, n_c)
    lam, n_c = spec.lam, spec.n_c
    two_n1 = 2 * n_c + 1
    sinh2 = math.sinh(2 * lam)
    K0 = (2 * n_c**2 + 2 * n_c + 1) / (4 * two_n1) * sinh2
    K1 = n_c * (n_c + 1) / two_n1 * math.cosh(2 * lam)
    K2 = (n_c * (n_c + 1) / two_n1) ** 2 - sinh2**2 / 4
    Z = n_c**2 - two_n1 * math.sinh(lam) ** 2
    H = n_c * math.cosh(2 * lam) + math.sinh(lam) ** 2
    return FidelityCoefficients(K0, K1, K2, Z, H)
