"""
Photon statistics of photon-added squeezed thermal light
========================================================

Normalization, mean photon number, Mandel Q and the photon-number
distribution, all from closed forms.
"""

import numpy as np

from pasts import StateSpec, mandel_q, mean_photon, normalization, pnd_pasts_distribution

# With no squeezing the normalization is m! (n_c + 1)^m
print("C for lambda=0, n_c=0.5:", [normalization(StateSpec(0, 0.5, m)) for m in range(4)])

# Mean photon number and Q while the squeezing grows.
# Weak squeezing plus added photons gives sub-Poissonian light (Q < 0).
print("\n lambda    <n> (m=1)    Q (m=0)     Q (m=1)     Q (m=3)")
for lam in np.linspace(0, 1.2, 7):
    row = [mean_photon(StateSpec(lam, 0.01, 1))] + [mandel_q(StateSpec(lam, 0.01, m)) for m in (0, 1, 3)]
    print(f"{lam:7.2f}  " + "  ".join(f"{v:10.4f}" for v in row))

# Adding photons empties the low-n bins: P(n) = 0 for n < m and the peak moves away from zero.
for m in range(4):
    p = pnd_pasts_distribution(StateSpec(0.3, 1.0, m))
    head = " ".join(f"{v:.3f}" for v in p[:8])
    print(f"m={m}: peak at n={int(np.argmax(p))}, sum={p.sum():.15f}  P(0..7) = {head}")

# Strong squeezing of a cold seed: the generating-function argument D goes negative,
# the distribution still sums to one.
p = pnd_pasts_distribution(StateSpec(1.2, 0.0, 2))
print(f"\nlambda=1.2, n_c=0, m=2: {len(p)} terms, sum = {p.sum():.15f}")
