"""Entangled clock: product state vs GHZ-form state of N precessing spins.

Each spin picks up a phase ``exp(-i Omega0 t)`` on its excited component.
The product state ``[(|g> + |e>)/sqrt2]^N`` returns the overlap
``[(1 + e^{-i Omega0 t})/2]^N`` whereas ``(|g...g> + |e...e>)/sqrt2`` gives
``(1 + e^{-i N Omega0 t})/2``, a clock ticking N times faster.
"""

import numpy as np

from ..constants import MAX_CLOCK_QUBITS
from ..errors import CapacityError
from ..states import PureState


def _excitations(n):
    # index 0 is |e> on each factor, so the excitation count is n - popcount(index)
    idx = np.arange(2**n)
    ones = np.array([bin(i).count("1") for i in idx])
    return n - ones


def clock_phase_demo(n_qubits, omega0, t, max_qubits=MAX_CLOCK_QUBITS):
    """Return ``(product_overlap, ghz_overlap)`` as complex numbers."""
    if n_qubits < 1:
        raise ValueError("need at least one spin")
    if n_qubits > max_qubits:
        raise CapacityError(f"{n_qubits} spins exceeds limit {max_qubits}")
    dim = 2**n_qubits
    phases = np.exp(-1j * omega0 * t * _excitations(n_qubits))
    product = PureState.from_amplitudes(np.ones(dim))
    ghz_amps = np.zeros(dim, dtype=complex)
    ghz_amps[0] = ghz_amps[-1] = 1.0
    ghz = PureState.from_amplitudes(ghz_amps)
    out = []
    for psi in (product, ghz):
        evolved = PureState(psi.dims, phases * psi.amps)
        out.append(psi.overlap(evolved))
    return out[0], out[1]


def clock_overlaps_closed_form(n_qubits, omega0, t):
    x = omega0 * t
    return ((1 + np.exp(-1j * x)) / 2) ** n_qubits, (1 + np.exp(-1j * n_qubits * x)) / 2
