"""
Losing negativity in a thermal channel
======================================

The photon-added state is sent through a thermal channel with mean photon
number N. Its origin value turns positive at a decay time that depends on N
only, not on the squeezing or the seed temperature.
"""

import numpy as np

from pasts import (
    ChannelSpec,
    NoFiniteThreshold,
    StateSpec,
    evolved_wigner,
    threshold_added,
    threshold_subtracted,
)

s = StateSpec(0.3, 0.3, 1)
for N in (0.0, 0.2, 2.0):
    kt_c = threshold_added(N)
    print(f"N={N}: threshold kt_c = {kt_c:.6f}")
    for kt in (0.5 * kt_c, 0.99 * kt_c, 1.01 * kt_c, 2 * kt_c):
        print(f"   kt={kt:.4f}  W(0) = {evolved_wigner(0, s, ChannelSpec(N, kt)):+.3e}")

# independence from the state parameters
print("\nbisection on W(0) for several seeds, N = 0.2:")
from scipy.optimize import brentq

for lam, n_c in [(0.1, 0.1), (0.8, 1.0), (0.3, 0.5)]:
    seed = StateSpec(lam, n_c, 1)
    root = brentq(lambda kt: evolved_wigner(0, seed, ChannelSpec(0.2, kt)), 1e-4, 2.0, xtol=1e-14)
    print(f"   lambda={lam}, n_c={n_c}: {root:.10f}")

# the photon-subtracted state keeps its negativity for a shorter time
print("\nadded vs subtracted thresholds, N=0.2, lambda=0.8:")
for n_c in (0.0, 0.1, 0.3, 0.7, 1.0):
    try:
        sub = f"{threshold_subtracted(0.2, n_c, 0.8):.4f}"
    except NoFiniteThreshold as exc:
        sub = str(exc)
    print(f"   n_c={n_c}: added {threshold_added(0.2):.4f}, subtracted {sub}")

# long times: everything relaxes to the bath Gaussian, with an e^{-2 kt} residual
eta = np.linspace(-2, 2, 9)
for kt in (2, 5, 8):
    w = evolved_wigner(eta, s, ChannelSpec(0.2, kt))
    bath = np.exp(-2 * eta**2 / 1.4) / (np.pi * 1.4)
    print(f"kt={kt}: max |W - bath| = {np.max(np.abs(w - bath)):.2e}")
