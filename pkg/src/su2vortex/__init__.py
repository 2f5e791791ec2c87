"""Two-mode bosonic evolution under SU(2) Hamiltonians.

Fock-state amplitudes, entanglement entropy, quantum-vortex wavefunctions with
their Laguerre-Gaussian content, and reduced-state coherence functions.
"""
from .su2core import (
    ReducedSpectrum,
    SU2Params,
    TransferMatrix,
    TwoModeState,
    coeff_prob,
    coherent_evolution,
    compose,
    entropy,
    entropy_at,
    fock_coefficients,
    induced_unitary,
    prep_matrix_vortex,
    reduced_spectrum,
    spectrum_at,
    tilde_v21_sq,
    transfer_matrix,
)
from .vortex import (
    ModalDecomposition,
    VortexReport,
    classify_special_condition,
    detect_single_vortex,
    gamma_pm,
    vortex_decomposition,
    wavefunction,
)
from .coherence import correlation, spatial_coherence

__version__ = "0.1.0"

__all__ = [
    "ModalDecomposition", "ReducedSpectrum", "SU2Params", "TransferMatrix", "TwoModeState",
    "VortexReport", "classify_special_condition", "coeff_prob", "coherent_evolution", "compose",
    "correlation", "detect_single_vortex", "entropy", "entropy_at", "fock_coefficients",
    "gamma_pm", "induced_unitary", "prep_matrix_vortex", "reduced_spectrum", "spatial_coherence",
    "spectrum_at", "tilde_v21_sq", "transfer_matrix", "vortex_decomposition", "wavefunction",
]
