"""
How far from Gaussian?
======================

The overlap between the photon-added state and its Gaussian seed, divided by
the seed purity, used as a rough non-Gaussianity gauge. (It is not the
Uhlmann fidelity.)
"""

import numpy as np

from pasts import StateSpec, fidelity, fidelity_ratio, subtracted_fidelity

n_c = 0.2
print("lambda   " + "   ".join(f"F(m={m})" for m in range(4)))
for lam in np.linspace(0, 1, 6):
    print(f"{lam:5.2f}  " + "  ".join(f"{fidelity(StateSpec(lam, n_c, m)):8.5f}" for m in range(4)))

s = StateSpec(0.3, n_c, 1)
print(f"\nadded F = {fidelity(s):.6f}, subtracted F = {subtracted_fidelity(s):.6f}, "
      f"ratio = {fidelity_ratio(s):.6f}")
# ratio < 1: adding a photon moves the state further from its seed than subtracting one
print("ratio for m = 1..5:", [round(fidelity_ratio(StateSpec(0.3, n_c, m)), 4) for m in range(1, 6)])
