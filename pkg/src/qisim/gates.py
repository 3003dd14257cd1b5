"""Qubit gates, spin eigenstates, the Bell basis and the dense QFT.

Multi-qubit gates are built by Kronecker embedding (see
:func:`qisim.states.embed`).  The Bell states carry the exact signs of the
lecture-note conventions::

    B0 = (|ud> - |du>)/sqrt2      B1 = (|ud> + |du>)/sqrt2
    B2 = (-|uu> + |dd>)/sqrt2     B3 = (-|uu> - |dd>)/sqrt2

Note on the x-basis: ``|up> = (|right> + |left>)/sqrt2``.  The normalization
is ``1/sqrt2``; a bare ``1/2`` prefactor would not give a unit vector.
"""

from dataclasses import dataclass, field

import numpy as np

from .constants import MAX_QFT_QUBITS, STATE_TOL
from .errors import CapacityError, DegenerateRotationError, DimensionError
from .states import I2, SX, SY, SZ, HermitianOperator, PureState, embed

UP = np.array([1, 0], dtype=complex)
DOWN = np.array([0, 1], dtype=complex)
RIGHT = (UP + DOWN) / np.sqrt(2)
LEFT = (UP - DOWN) / np.sqrt(2)


@dataclass(frozen=True)
class MeasurementAxis:
    """Direction ``n = (sin t cos p, sin t sin p, cos t)`` on the Bloch sphere."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi + 1e-12:
            raise ValueError(f"polar angle {self.theta} outside [0, pi]")
        object.__setattr__(self, "phi", float(self.phi) % (2 * np.pi))

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        norm = np.linalg.norm(v)
        if norm == 0:
            raise ValueError("zero vector has no direction")
        v = v / norm
        theta = float(np.arccos(np.clip(v[2], -1.0, 1.0)))
        phi = float(np.arctan2(v[1], v[0]))
        return cls(theta, phi)

    @property
    def vector(self):
        st = np.sin(self.theta)
        return np.array([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])


Z_AXIS = MeasurementAxis(0.0, 0.0)
X_AXIS = MeasurementAxis(np.pi / 2, 0.0)
Y_AXIS = MeasurementAxis(np.pi / 2, np.pi / 2)


@dataclass(frozen=True)
class GateOp:
    """A labelled unitary acting on ``n_qubits`` qubits."""

    label: str
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        d = mat.shape[0]
        if mat.shape != (d, d):
            raise DimensionError("gate matrix must be square")
        if np.max(np.abs(mat.conj().T @ mat - np.eye(d))) > STATE_TOL:
            raise ValueError(f"gate {self.label} is not unitary")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def n_qubits(self):
        return int(round(np.log2(self.matrix.shape[0])))

    def on(self, targets, n_qubits):
        """Embed this gate into an ``n_qubits`` register acting on ``targets``."""
        if isinstance(targets, int):
            targets = (targets,)
        return GateOp(
            f"{self.label}{list(targets)}", embed(self.matrix, targets, (2,) * n_qubits)
        )

    def apply(self, state, targets=None):
        """Apply to a :class:`PureState`; ``targets`` defaults to the whole register."""
        if targets is None:
            return state.evolve(self.matrix)
        if isinstance(targets, int):
            targets = (targets,)
        return state.evolve(embed(self.matrix, targets, state.dims))

    def dagger(self):
        return GateOp(f"{self.label}^dag", self.matrix.conj().T)

    def __matmul__(self, other):
        return GateOp(f"{self.label}*{other.label}", self.matrix @ other.matrix)


IDENTITY = GateOp("I", I2)
PAULI_X = GateOp("X", SX)
PAULI_Y = GateOp("Y", SY)
PAULI_Z = GateOp("Z", SZ)
I_Y = GateOp("iY", 1j * SY)
MINUS_I_Y = GateOp("-iY", -1j * SY)


def pauli_axis(n):
    """Stern-Gerlach observable ``n . sigma``."""
    v = n.vector if isinstance(n, MeasurementAxis) else np.asarray(n, dtype=float)
    return HermitianOperator(v[0] * SX + v[1] * SY + v[2] * SZ, (2,))


def spin_eigenstates(theta, phi=0.0):
    """The +1 and -1 eigenstates of ``n(theta, phi) . sigma``.

    Returned with the half-angle phases distributed symmetrically:
    ``psi+ = (cos(t/2) e^{-ip/2}, sin(t/2) e^{ip/2})`` and
    ``psi- = (-sin(t/2) e^{-ip/2}, cos(t/2) e^{ip/2})``.
    At ``theta = 0`` these are ``|up>`` and ``|down>``.
    """
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    em, ep = np.exp(-0.5j * phi), np.exp(0.5j * phi)
    plus = PureState((2,), np.array([c * em, s * ep]))
    minus = PureState((2,), np.array([-s * em, c * ep]))
    return plus, minus


def axis_eigenstate(axis, sign):
    plus, minus = spin_eigenstates(axis.theta, axis.phi)
    return plus if sign > 0 else minus


def _su2(angle, v):
    """``exp(-i angle/2 v.sigma)`` for unit ``v``."""
    vs = v[0] * SX + v[1] * SY + v[2] * SZ
    return np.cos(angle / 2) * I2 - 1j * np.sin(angle / 2) * vs


def axis_change_unitary(n, n_prime, perpendicular=None):
    """Rotation ``exp(i Theta/2 v.sigma)`` carrying axis ``n`` onto ``n_prime``.

    ``cos Theta = n'.n`` and ``v = n' x n / |n' x n|``.  For parallel or
    antiparallel axes the cross product vanishes; pass an explicit unit
    ``perpendicular`` there, otherwise :class:`DegenerateRotationError`.
    """
    a = n.vector if isinstance(n, MeasurementAxis) else np.asarray(n, float)
    b = n_prime.vector if isinstance(n_prime, MeasurementAxis) else np.asarray(n_prime, float)
    cos_t = float(np.clip(np.dot(a, b), -1.0, 1.0))
    big_theta = float(np.arccos(cos_t))
    cross = np.cross(b, a)
    norm = np.linalg.norm(cross)
    if norm < 1e-12:
        if perpendicular is None:
            raise DegenerateRotationError(
                "axes are parallel or antiparallel; supply an explicit perpendicular axis"
            )
        v = np.asarray(perpendicular, dtype=float)
        v = v / np.linalg.norm(v)
    else:
        v = cross / norm
    return GateOp(f"U(n->n')", _su2(-big_theta, v))


def rotation_y(angle):
    """``R^y_angle = exp(-i angle/2 sigma^y)``."""
    return GateOp(f"Ry({angle:g})", _su2(angle, (0.0, 1.0, 0.0)))


def hadamard():
    """``H = (sigma^z + sigma^x)/sqrt2``."""
    return GateOp("H", (SZ + SX) / np.sqrt(2))


def cnot(control, target, n_qubits=2):
    """CNOT flipping ``target`` iff ``control`` is excited (``|e> = |up>``).

    Built literally as ``(1+Zc)/2 X_t + (1-Zc)/2 I_t``.
    """
    if control == target:
        raise ValueError("control and target must differ")
    if not (0 <= control < n_qubits and 0 <= target < n_qubits):
        raise DimensionError("qubit index out of range")
    dims = (2,) * n_qubits
    eye = np.eye(2**n_qubits)
    zc = embed(SZ, (control,), dims)
    xt = embed(SX, (target,), dims)
    mat = 0.5 * (eye + zc) @ xt + 0.5 * (eye - zc)
    return GateOp(f"CNOT({control},{target})", mat)


_SQ2 = 1 / np.sqrt(2)
_BELL = (
    _SQ2 * (np.kron(UP, DOWN) - np.kron(DOWN, UP)),
    _SQ2 * (np.kron(UP, DOWN) + np.kron(DOWN, UP)),
    _SQ2 * (-np.kron(UP, UP) + np.kron(DOWN, DOWN)),
    _SQ2 * (-np.kron(UP, UP) - np.kron(DOWN, DOWN)),
)


def bell_state(k):
    """Bell state ``|B_k>``, ``k`` in 0..3."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"Bell label must be 0..3, got {k!r}")
    return PureState((2, 2), _BELL[k])


def bell_circuit():
    """``H_1 CNOT_12`` as a single 4x4 gate (first qubit is the control)."""
    return hadamard().on(0, 2) @ cnot(0, 1, 2)


def bell_measurement_map(state):
    """Map a two-qubit state through CNOT_12 followed by H on qubit 1."""
    if state.dims != (2, 2):
        raise DimensionError("two-qubit state required")
    return state.evolve(bell_circuit().matrix)


def bell_preparation_map(state):
    """The Bell-measurement circuit run backwards (creates Bell states)."""
    if state.dims != (2, 2):
        raise DimensionError("two-qubit state required")
    return state.evolve(bell_circuit().dagger().matrix)


def qft(n_qubits, max_qubits=MAX_QFT_QUBITS):
    """Dense QFT: ``U[k, j] = exp(2 pi i k j / N) / sqrt(N)`` with ``N = 2**n``.

    Indices are positions in the amplitude vector, so ``U @ f`` is the
    classical discrete Fourier transform of the amplitudes ``f``.
    """
    if n_qubits < 1:
        raise ValueError("need at least one qubit")
    if n_qubits > max_qubits:
        raise CapacityError(f"QFT on {n_qubits} qubits exceeds limit {max_qubits}")
    big_n = 2**n_qubits
    k = np.arange(big_n)
    mat = np.exp(2j * np.pi * np.outer(k, k) / big_n) / np.sqrt(big_n)
    return GateOp(f"QFT({n_qubits})", mat)


def apply_qft(f):
    """Normalize the amplitudes ``f`` and return the transformed :class:`PureState`."""
    f = np.asarray(f, dtype=complex)
    n = int(round(np.log2(f.size)))
    if 2**n != f.size:
        raise DimensionError("amplitude vector length must be a power of two")
    return qft(n).apply(PureState.from_amplitudes(f))
