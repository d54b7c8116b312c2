"""
Wigner function and its negative regions
========================================

A single added photon always makes the origin negative. Two added photons
make the origin positive again and push the negativity off-center.

Convention: the vacuum is exp(-2|alpha|^2)/pi, so W integrates to 1/2.
"""

import numpy as np

from pasts import StateSpec, wigner_pasts
from pasts.validation import midpoint_grid

axis = np.linspace(-3, 3, 241)
alpha = axis[None, :] + 1j * axis[:, None]

for m in (1, 2, 3):
    w = wigner_pasts(alpha, StateSpec(0.3, 0.1, m))
    i, j = np.unravel_index(np.argmin(w), w.shape)
    print(f"m={m}: W(0) = {wigner_pasts(0, StateSpec(0.3, 0.1, m)):+.4f}, "
          f"minimum {w.min():+.4f} at {alpha[i, j]:.2f}, negative area fraction {np.mean(w < 0):.3f}")

# crude terminal picture of the m=2 surface: '-' marks negative values
w = wigner_pasts(alpha[::12, ::12], StateSpec(0.3, 0.1, 2))
for row in w[::-1]:
    print("".join("-" if v < -0.01 else ("+" if v > 0.05 else ".") for v in row))

grid, area = midpoint_grid(-6, 6, 241)
print("integral of W over the plane:", wigner_pasts(grid, StateSpec(0.3, 0.1, 2)).sum() * area)
