"""Square-root-free polynomial kernels.

Every closed form in this package is evaluated through the two "scaled"
families below instead of through the textbook polynomials at arguments
like ``x / sqrt(y)``:

* ``S_m(x, y) = y**(m/2) * P_m(x / sqrt(y))``  (Legendre)
* ``h_k(u, d) = d**(k/2) * H_k(u / (2 sqrt(d)))``  (physicists' Hermite)

Both are polynomials in their arguments, so they stay finite and smooth for
``y <= 0`` / ``d <= 0`` where the unscaled forms need a square root of a
negative or vanishing number.

All functions broadcast over numpy arrays.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "scaled_legendre",
    "scaled_legendre_sequence",
    "scaled_hermite",
    "scaled_hermite_sequence",
    "hermite",
    "laguerre",
    "bilinear_hermite_sum",
    "falling_factorial",
]

_EXACT_FACTORIAL_MAX = 20


def _check_order(n: int) -> int:
    if isinstance(n, (bool, np.bool_)) or int(n) != n or n < 0:
        raise ValueError(f"polynomial order must be a non-negative integer, got {n!r}")
    return int(n)


def falling_factorial(n: int, k: int) -> float:
    """``n! / (n - k)!`` as a float; exact integer arithmetic for small ``n``."""
    if k > n:
        return 0.0
    if n <= _EXACT_FACTORIAL_MAX:
        return float(math.perm(n, k))
    return math.exp(math.lgamma(n + 1) - math.lgamma(n - k + 1))


def _coefficient(m: int, l: int) -> float:
    # (m!)^2 / (l! [(m-l)!]^2) = binom(m, l) * m! / (m-l)!
    if m <= _EXACT_FACTORIAL_MAX:
        return float(math.comb(m, l) * math.perm(m, l))
    return math.exp(
        2 * math.lgamma(m + 1) - math.lgamma(l + 1) - 2 * math.lgamma(m - l + 1)
    )


def scaled_legendre_sequence(m_max: int, x, y) -> np.ndarray:
    """Return ``[S_0, ..., S_{m_max}]`` stacked along axis 0.

    Uses ``(k+1) S_{k+1} = (2k+1) x S_k - k y S_{k-1}``, which is the Legendre
    three-term recurrence multiplied through by ``y**((k+1)/2)``.
    """
    m_max = _check_order(m_max)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    shape = np.broadcast(x, y).shape
    out = np.empty((m_max + 1,) + shape)
    out[0] = 1.0
    if m_max >= 1:
        out[1] = x
    for k in range(1, m_max):
        out[k + 1] = ((2 * k + 1) * x * out[k] - k * y * out[k - 1]) / (k + 1)
    return out


def scaled_legendre(m: int, x, y):
    """``S_m(x, y) = sum_k 2^-m (-1)^k C(m,k) C(2m-2k,m) x^(m-2k) y^k``.

    Equal to ``y**(m/2) * P_m(x/sqrt(y))`` for ``y > 0`` and defined for any
    real ``y``.

    >>> scaled_legendre(2, 2.0, 1.0)
    5.5
    """
    m = _check_order(m)
    val = scaled_legendre_sequence(m, x, y)[m]
    return val.item() if val.ndim == 0 else val


def scaled_hermite_sequence(k_max: int, u, d) -> np.ndarray:
    """Return ``[h_0, ..., h_{k_max}]`` with ``h_{k+1} = u h_k - 2k d h_{k-1}``."""
    k_max = _check_order(k_max)
    u = np.asarray(u)
    d = np.asarray(d, dtype=float)
    dtype = np.result_type(u.dtype, d.dtype, float)
    shape = np.broadcast(u, d).shape
    out = np.empty((k_max + 1,) + shape, dtype=dtype)
    out[0] = 1.0
    if k_max >= 1:
        out[1] = u
    for k in range(1, k_max):
        out[k + 1] = u * out[k] - 2 * k * d * out[k - 1]
    return out


def scaled_hermite(k: int, u, d):
    """``h_k(u, d) = sum_j (-1)^j k!/(j!(k-2j)!) u^(k-2j) d^j``.

    Equal to ``d**(k/2) * H_k(u / (2 sqrt(d)))`` for ``d > 0``; ``h_k(u, 0) = u**k``.
    """
    k = _check_order(k)
    val = scaled_hermite_sequence(k, u, d)[k]
    return val.item() if val.ndim == 0 else val


def hermite(n: int, z):
    """Physicists' Hermite polynomial ``H_n(z)`` by three-term recurrence."""
    n = _check_order(n)
    z = np.asarray(z)
    h_prev = np.ones_like(z, dtype=np.result_type(z.dtype, float))
    if n == 0:
        return h_prev.item() if h_prev.ndim == 0 else h_prev
    h = 2 * z * h_prev
    for k in range(1, n):
        h, h_prev = 2 * z * h - 2 * k * h_prev, h
    return h.item() if h.ndim == 0 else h


def laguerre(n: int, x):
    """Laguerre polynomial ``L_n(x)`` by three-term recurrence."""
    n = _check_order(n)
    x = np.asarray(x, dtype=float)
    l_prev = np.ones_like(x)
    if n == 0:
        return l_prev.item() if l_prev.ndim == 0 else l_prev
    l = 1.0 - x
    for k in range(1, n):
        l, l_prev = ((2 * k + 1 - x) * l - k * l_prev) / (k + 1), l
    return l.item() if l.ndim == 0 else l


def bilinear_hermite_sum(m: int, d, chi, u):
    r"""Evaluate the photon-addition kernel

    .. math::

        \sum_{l=0}^{m} \frac{(m!)^2 \chi^l}{l!\,[(m-l)!]^2}\,
        |h_{m-l}(-i u, d)|^2

    This is :math:`\partial_s^m \partial_t^m \exp[d(s^2+t^2) + \chi s t + u t + u^* s]`
    at ``s = t = 0`` for real ``d`` and ``chi``. ``u`` may be an array;
    ``d`` and ``chi`` are scalars.
    """
    m = _check_order(m)
    u = np.asarray(u, dtype=complex)
    h = scaled_hermite_sequence(m, -1j * u, d)
    mod2 = h.real**2 + h.imag**2
    total = np.zeros(u.shape)
    chi_pow = 1.0
    for l in range(m + 1):
        total = total + _coefficient(m, l) * chi_pow * mod2[m - l]
        chi_pow *= chi
    return total.item() if total.ndim == 0 else total
