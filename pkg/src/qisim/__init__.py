"""qisim: quantum-information and circuit-QED simulation toolkit.

Basis convention: ``|e> = |up> = |1>`` is index 0 and ``|g> = |down> = |0>``
is index 1; multi-qubit indices are big-endian.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapacityError,
    ConvergenceError,
    DimensionError,
    NotHermitianError,
    NotNormalizedError,
    ProtocolAbort,
    QisimError,
    RegimeError,
)
from .gates import GateOp, MeasurementAxis, bell_state, cnot, hadamard, qft  # noqa: E402
from .rng import make_rng  # noqa: E402
from .states import (  # noqa: E402
    BlochVector,
    DensityMatrix,
    HermitianOperator,
    PureState,
    entanglement_entropy,
    partial_trace,
    shannon_entropy,
    von_neumann_entropy,
)

__all__ = [
    "BlochVector",
    "CapacityError",
    "ConvergenceError",
    "DensityMatrix",
    "DimensionError",
    "GateOp",
    "HermitianOperator",
    "MeasurementAxis",
    "NotHermitianError",
    "NotNormalizedError",
    "ProtocolAbort",
    "PureState",
    "QisimError",
    "RegimeError",
    "bell_state",
    "cnot",
    "entanglement_entropy",
    "hadamard",
    "make_rng",
    "partial_trace",
    "qft",
    "shannon_entropy",
    "von_neumann_entropy",
]
