"""Circuit-QED numerics (hbar = 1)."""

from .jc import (
    dispersive_chi,
    dispersive_chi_numeric,
    jc_hamiltonian,
    jc_spectrum,
    three_level_chi,
    two_level_reduction,
)
from .kerr import KerrMatrix, ModeSpec, kerr_expansion, quartic_oracle
from .lc import (
    LCParams,
    OnePortNetwork,
    admittance,
    find_modes,
    lc_quantize,
    oscillator_wavefunctions,
)
from .transmon import TransmonParams, transmon_perturbative, transmon_spectrum_exact

__all__ = [
    "KerrMatrix",
    "LCParams",
    "ModeSpec",
    "OnePortNetwork",
    "TransmonParams",
    "admittance",
    "dispersive_chi",
    "dispersive_chi_numeric",
    "find_modes",
    "jc_hamiltonian",
    "jc_spectrum",
    "kerr_expansion",
    "lc_quantize",
    "oscillator_wavefunctions",
    "quartic_oracle",
    "three_level_chi",
    "transmon_perturbative",
    "transmon_spectrum_exact",
    "two_level_reduction",
]
