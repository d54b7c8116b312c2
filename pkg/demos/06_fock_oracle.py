"""
Checking the closed forms by brute force
========================================

The Fock-space oracle builds the density matrix directly: a matrix-exponential
squeezer, literal a-dagger products, an RK4 master equation and a
displaced-parity Wigner function. None of it uses the closed forms.
"""

import numpy as np

from pasts import ChannelSpec, StateSpec, evolved_wigner, mandel_q, normalization, wigner_pasts
from pasts import fock_oracle as fo

spec = StateSpec(0.3, 0.1, 1)
sts = fo.build_sts(spec.lam, spec.n_c)
added = fo.add_photons(sts, spec.m)
print("normalization   oracle", added.trace_raw, " closed form", normalization(spec))
print("W(0)            oracle", fo.wigner_parity(added, 0), " closed form", wigner_pasts(0, spec))

evolved = fo.lindblad_evolve(added, ChannelSpec(0.2, 0.1))
print("W(0.4+0.2j) at kt=0.1  oracle", fo.wigner_parity(evolved, 0.4 + 0.2j),
      " closed form", evolved_wigner(0.4 + 0.2j, spec, ChannelSpec(0.2, 0.1)))

# Truncation matters for hot, strongly squeezed seeds with several added photons.
hard = StateSpec(0.5, 1.0, 3)
print("\nMandel Q of", hard, "closed form", mandel_q(hard))
for dim in (80, 120, 160, 240):
    st = fo.add_photons(fo.build_sts(hard.lam, hard.n_c, dim), hard.m)
    n = np.arange(st.dim)
    p = st.populations()
    q = p @ (n * (n - 1)) / (p @ n) - p @ n
    print(f"   dim={dim:3d}: oracle Q = {q:.12f}  rel. error {abs(q / mandel_q(hard) - 1):.1e}")

# Starving the truncation is caught rather than silently wrong
try:
    fo.build_sts(1.2, 0.5, 40)
except fo.TruncationError as exc:
    print("\nTruncationError:", exc)

print("squeezed number-state identity residual, n=3:", fo.squeezed_number_identity_check(3, 0.3))
