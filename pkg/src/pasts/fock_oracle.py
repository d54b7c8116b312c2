"""Brute-force ground truth in a truncated Fock space.

Nothing here uses the closed forms under test: the squeezer is a dense matrix
exponential, photon addition is literal ``a†^m rho a^m``, the channel is an
RK4 integration of the master equation, and the Wigner function is the
expectation of the displaced parity operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.special import eval_genlaguerre, gammaln

from .states import ChannelSpec, PhasePoint

__all__ = [
    "DEFAULT_DIM",
    "TruncationError",
    "IntegrationError",
    "FockState",
    "annihilation",
    "squeeze_operator",
    "thermal_state",
    "build_sts",
    "add_photons",
    "subtract_photons",
    "lindblad_evolve",
    "displacement_elements",
    "wigner_parity",
    "squeezed_number_identity_check",
]

DEFAULT_DIM = 80
# population allowed in the top TAIL_LEVELS levels before a truncation is declared unsafe
TAIL_LEVELS = 10
TAIL_TOL = 1e-8
ALPHA_MAX = 4.0


class TruncationError(ValueError):
    pass


class IntegrationError(RuntimeError):
    pass


@dataclass
class FockState:
    """Normalized density matrix with the trace it had before normalization."""

    rho: np.ndarray
    trace_raw: float = 1.0

    def __post_init__(self):
        rho = np.asarray(self.rho, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {rho.shape}")
        herm_err = np.max(np.abs(rho - rho.conj().T)) if rho.size else 0.0
        if herm_err > 1e-12:
            raise ValueError(f"density matrix not Hermitian (max deviation {herm_err:.2e})")
        rho = 0.5 * (rho + rho.conj().T)
        tr = np.trace(rho).real
        if abs(tr - 1) > 1e-10:
            raise ValueError(f"density matrix trace {tr!r} is not 1")
        evmin = np.linalg.eigvalsh(rho).min()
        if evmin < -1e-9:
            raise ValueError(f"density matrix has negative eigenvalue {evmin:.3e}")
        self.rho = rho

    @property
    def dim(self) -> int:
        return self.rho.shape[0]

    def populations(self) -> np.ndarray:
        return self.rho.diagonal().real.copy()

    def expect(self, op: np.ndarray) -> complex:
        return np.trace(self.rho @ op)

    def purity(self) -> float:
        return float(np.vdot(self.rho, self.rho).real)


def annihilation(dim: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1)


def squeeze_operator(lam: float, dim: int) -> np.ndarray:
    """``exp[lam (a^2 - a†^2) / 2]`` by scaling-and-squaring in the truncated space."""
    a = annihilation(dim)
    a2 = a @ a
    return expm(0.5 * lam * (a2 - a2.T))


def thermal_state(n_c: float, dim: int) -> np.ndarray:
    n = np.arange(dim)
    if n_c == 0:
        p = (n == 0).astype(float)
    else:
        p = np.exp(n * math.log(n_c) - (n + 1) * math.log1p(n_c))
    return np.diag(p).astype(complex)


def _check_tail(rho: np.ndarray, levels: int, what: str):
    # tiny spaces: look at the upper half only
    levels = min(levels, rho.shape[0] // 2)
    tail = rho.diagonal().real[-levels:].sum()
    if tail > TAIL_TOL:
        raise TruncationError(
            f"{what}: population {tail:.2e} in the top {levels} of {rho.shape[0]} levels; "
            "increase the truncation dimension"
        )


def build_sts(lam: float, n_c: float, dim: int = DEFAULT_DIM) -> FockState:
    """Squeezed thermal state ``S(-lam) rho_th S(-lam)†`` with ``S`` as in :func:`squeeze_operator`."""
    if n_c > 0 and dim * math.log(n_c / (n_c + 1)) > math.log(1e-14):
        raise TruncationError(f"thermal tail too heavy for dim={dim} at n_c={n_c}")
    U = squeeze_operator(-lam, dim)
    rho = U @ thermal_state(n_c, dim) @ U.conj().T
    _check_tail(rho, TAIL_LEVELS, "squeezed thermal state")
    rho = 0.5 * (rho + rho.conj().T)
    return FockState(rho / np.trace(rho).real)


def add_photons(state: FockState, m: int) -> FockState:
    """``a†^m rho a^m``, renormalized; ``trace_raw`` holds the normalization factor.

    The space grows by ``m`` levels so that ``a†`` acts exactly on every
    level of the input; the input itself must leave headroom at its top.
    """
    if m == 0:
        return FockState(state.rho.copy(), 1.0)
    _check_tail(state.rho, TAIL_LEVELS, "photon addition headroom")
    dim = state.dim + m
    rho = np.zeros((dim, dim), dtype=complex)
    rho[: state.dim, : state.dim] = state.rho
    ad = np.linalg.matrix_power(annihilation(dim).T, m)
    rho = ad @ rho @ ad.T
    raw = np.trace(rho).real
    rho = 0.5 * (rho + rho.conj().T) / raw
    return FockState(rho, raw)


def subtract_photons(state: FockState, m: int) -> FockState:
    """``a^m rho a†^m``, renormalized; ``trace_raw`` holds the normalization factor."""
    if m == 0:
        return FockState(state.rho.copy(), 1.0)
    a = np.linalg.matrix_power(annihilation(state.dim), m)
    rho = a @ state.rho @ a.conj().T
    raw = np.trace(rho).real
    rho = 0.5 * (rho + rho.conj().T) / raw
    return FockState(rho, raw)


def _dissipator(rho: np.ndarray, N: float, sq: np.ndarray, n: np.ndarray, nn1: np.ndarray):
    # 2 a rho a† - a†a rho - rho a†a and 2 a† rho a - a a† rho - rho a a†,
    # written with index shifts instead of matrix products
    out = -(N + 1) * (n[:, None] + n[None, :]) * rho - N * (nn1[:, None] + nn1[None, :]) * rho
    outer = sq[:, None] * sq[None, :]
    out[:-1, :-1] += 2 * (N + 1) * outer * rho[1:, 1:]
    out[1:, 1:] += 2 * N * outer * rho[:-1, :-1]
    return out


def lindblad_evolve(state: FockState, channel: ChannelSpec, steps: int | None = None) -> FockState:
    """Integrate the thermal-channel master equation to time ``channel.kt``.

    Fixed-step RK4 in the dimensionless time ``kt``; default step <= 1e-3.
    The density matrix is re-symmetrized after every step.
    """
    kt = channel.kt
    if kt == 0:
        return FockState(state.rho.copy(), state.trace_raw)
    if steps is None:
        steps = max(1, math.ceil(kt / 1e-3))
    h = kt / steps
    dim = state.dim
    n = np.arange(dim, dtype=float)
    sq = np.sqrt(n[1:])
    # a a† in the truncated space: the top level has no level above it
    nn1 = n + 1
    nn1[-1] = 0.0
    N = channel.bath_mean
    rho = state.rho.copy()
    for _ in range(steps):
        k1 = _dissipator(rho, N, sq, n, nn1)
        k2 = _dissipator(rho + 0.5 * h * k1, N, sq, n, nn1)
        k3 = _dissipator(rho + 0.5 * h * k2, N, sq, n, nn1)
        k4 = _dissipator(rho + h * k3, N, sq, n, nn1)
        rho = rho + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        rho = 0.5 * (rho + rho.conj().T)
    drift = abs(np.trace(rho).real - 1)
    if drift > 1e-6:
        raise IntegrationError(f"trace drifted by {drift:.2e} during integration")
    if N > 0:
        _check_tail(rho, TAIL_LEVELS, "thermal-channel evolution")
    return FockState(rho / np.trace(rho).real, state.trace_raw)


def displacement_elements(alpha: complex, rows: int, cols: int) -> np.ndarray:
    """``<j|D(alpha)|k>`` for ``j < rows``, ``k < cols`` from the Laguerre closed form.

    Elements are exact (no truncation of the operator itself), so the
    result can be used with a row count larger than the state dimension.
    """
    j = np.arange(rows)[:, None]
    k = np.arange(cols)[None, :]
    x = abs(alpha) ** 2
    lo = np.minimum(j, k)
    diff = np.abs(j - k)
    # log of sqrt(lo!/hi!) |alpha|^diff exp(-x/2)
    log_mag = 0.5 * (gammaln(lo + 1) - gammaln(lo + diff + 1)) - 0.5 * x
    if alpha != 0:
        log_mag = log_mag + diff * math.log(abs(alpha))
        phase_j = np.exp(1j * math.atan2(alpha.imag, alpha.real) * diff)
        phase = np.where(j >= k, phase_j, (-1) ** diff * np.conj(phase_j))
    else:
        phase = np.ones(log_mag.shape, dtype=complex)
        log_mag = np.where(diff == 0, log_mag, -np.inf)
    lag = eval_genlaguerre(lo, diff, x)
    return np.exp(log_mag) * lag * phase


def wigner_parity(state: FockState, p, alpha_max: float = ALPHA_MAX) -> float:
    """Displaced-parity Wigner function ``(1/pi) tr[rho D(a) Pi D(a)†]``.

    This is half the usual ``2/pi`` normalization, matching the analytic
    convention of this package.
    """
    alpha = complex(p) if isinstance(p, PhasePoint) else complex(p)
    if abs(alpha) > alpha_max:
        raise ValueError(f"|alpha| = {abs(alpha):.3g} outside the trusted range {alpha_max}")
    dim = state.dim
    rows = dim + int(math.ceil(8 * abs(alpha) ** 2 + 12 * abs(alpha))) + 40
    M = displacement_elements(-alpha, rows, dim)
    parity = (-1.0) ** np.arange(rows)
    diag = np.sum((M @ state.rho) * M.conj(), axis=1).real
    return float(parity @ diag) / math.pi


def squeezed_number_identity_check(n: int, lam: float, dim: int = 160) -> float:
    """Residual of ``S|n> = (i sqrt(t))^n / sqrt(2^n n!) H_n(a† sech / (i sqrt(2 t))) S|0>``.

    ``S = exp[lam (a^2 - a†^2)/2]`` and ``t = tanh(lam)``; the Hermite
    polynomial is applied as a matrix polynomial in ``a†``. The comparison is
    restricted to levels well below the truncation edge.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    S = squeeze_operator(lam, dim)
    vac = S[:, 0]
    target = S[:, n]
    if n == 0:
        return float(np.linalg.norm(target - vac))
    t = math.tanh(lam)
    z = annihilation(dim).T.astype(complex) / (1j * math.sqrt(2 * t) * math.cosh(lam))
    coeffs = np.polynomial.hermite.herm2poly([0] * n + [1])
    v = coeffs[-1] * vac
    for c in coeffs[-2::-1]:
        v = z @ v + c * vac
    v = v * (1j * math.sqrt(t)) ** n / math.sqrt(2**n * math.factorial(n))
    keep = dim - n - TAIL_LEVELS
    return float(np.linalg.norm((target - v)[:keep]))
