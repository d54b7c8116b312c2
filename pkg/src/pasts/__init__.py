"""Photon-added squeezed thermal states: closed forms and a Fock-space oracle."""

from .states import (
    ChannelSpec,
    PhasePoint,
    StateSpec,
    evolved_coefficients,
    fidelity_coefficients,
    sts_coefficients,
    wigner_coefficients,
)
from .analytics import (
    mandel_q,
    mean_photon,
    normalization,
    pnd_pasts,
    pnd_pasts_distribution,
    pnd_sts,
    second_factorial_moment,
    wigner_pasts,
    wigner_sts,
    wigner_thermal_added,
)
from .decoherence import (
    NoFiniteThreshold,
    evolved_wigner,
    threshold_added,
    threshold_gap,
    threshold_subtracted,
)
from .gaussianity import (
    fidelity,
    fidelity_ratio,
    purity_sts,
    subtracted_fidelity,
    subtracted_normalization,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelSpec",
    "PhasePoint",
    "StateSpec",
    "evolved_coefficients",
    "fidelity_coefficients",
    "sts_coefficients",
    "wigner_coefficients",
    "mandel_q",
    "mean_photon",
    "normalization",
    "pnd_pasts",
    "pnd_pasts_distribution",
    "pnd_sts",
    "second_factorial_moment",
    "wigner_pasts",
    "wigner_sts",
    "wigner_thermal_added",
    "NoFiniteThreshold",
    "evolved_wigner",
    "threshold_added",
    "threshold_gap",
    "threshold_subtracted",
    "fidelity",
    "fidelity_ratio",
    "purity_sts",
    "subtracted_fidelity",
    "subtracted_normalization",
]
