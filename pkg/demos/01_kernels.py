"""
Polynomial kernels
==================

Everything in the package is built on two scaled polynomial families. They
are plain polynomials in both arguments, so the square roots that appear in
the usual textbook forms never have to be taken.
"""

import numpy as np

from pasts.kernels import bilinear_hermite_sum, scaled_hermite, scaled_legendre

# S_m(x, y) = y^{m/2} P_m(x / sqrt y). At y = 1 it is the Legendre polynomial.
for m in range(5):
    print(f"S_{m}(0.5, 1) = {scaled_legendre(m, 0.5, 1.0): .6f}")

# y may be zero or negative: the polynomial carries on where sqrt(y) would not
ys = np.array([1.0, 0.1, 0.0, -0.5])
print("S_4(1, y) for y =", ys, "->", scaled_legendre(4, 1.0, ys))

# h_k(u, d) = d^{k/2} H_k(u / 2 sqrt d) reduces to u^k when d = 0
print("h_3(2, 0)    =", scaled_hermite(3, 2.0, 0.0))
print("h_3(2, 1/4)  =", scaled_hermite(3, 2.0, 0.25))
print("h_3(1+1j, -1) =", scaled_hermite(3, 1 + 1j, -1.0))

# The photon-added Wigner factor is a bilinear sum of |h|^2 terms.
# With u = 0 it collapses to a single Legendre value:
m, d, chi = 3, 0.2, -0.7
print("bilinear sum at u=0:", bilinear_hermite_sum(m, d, chi, 0.0))
print("6 * S_3(chi, chi^2 - 4 d^2):", 6 * scaled_legendre(m, chi, chi**2 - 4 * d**2))
