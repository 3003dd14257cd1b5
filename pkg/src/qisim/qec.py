"""Repetition code and the 3-qubit bit-flip code.

Code words are ``|000>`` and ``|111>`` in the ``0 = g``, ``1 = e`` labelling,
so ``alpha|0> + beta|1>`` encodes to ``alpha|000> + beta|111>``.  The
encoder is the unitary ``CNOT_13 CNOT_12`` acting on ``|psi>|0>|0>``; no
copying is involved.

Stabilizers ``S1 = Z1 Z2`` and ``S2 = Z2 Z3`` are measured projectively.
Their eigenvalue pair is the syndrome:

    error   S1   S2
    I       +1   +1
    X1      -1   +1
    X2      -1   -1
    X3      +1   -1

Qubits are numbered 1..3 in the public API, matching the operator names.
An optional fourth factor is a one-qubit bath whose branch states are
``|Bath0> = |0>`` and ``|Bath2> = s|0> + sqrt(1-|s|^2)|1>`` with overlap
``s`` (default 0, i.e. orthogonal).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .gates import cnot
from .rng import child_rng
from .states import (
    SX,
    SZ,
    PureState,
    binary_entropy,
    embed,
    entanglement_entropy,
    kron,
    shannon_entropy,
)

SYNDROME_TABLE = {(1, 1): "I", (-1, 1): "X1", (-1, -1): "X2", (1, -1): "X3"}
ERROR_SYNDROMES = {v: k for k, v in SYNDROME_TABLE.items()}


# ---------------------------------------------------------------------------
# classical repetition code


def repetition_logical_error(p):
    """``P2 + P3 = 3p^2 - 2p^3`` for majority vote over three copies."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    return 3 * p**2 - 2 * p**3


def repetition_monte_carlo(p, trials, seed, chunk=100_000):
    """Count majority-vote failures: encode a random bit three times, flip each copy w.p. ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    failures = 0
    k = 0
    left = trials
    while left > 0:
        n = min(left, chunk)
        rng = child_rng(seed, k)
        bits = rng.integers(0, 2, size=n)
        copies = np.repeat(bits[:, None], 3, axis=1)
        flips = rng.random((n, 3)) < p
        received = copies ^ flips
        decoded = (received.sum(axis=1) >= 2).astype(bits.dtype)
        failures += int(np.count_nonzero(decoded != bits))
        left -= n
        k += 1
    return failures


# ---------------------------------------------------------------------------
# quantum bit-flip code


@dataclass(frozen=True)
class LogicalQubit3:
    state: PureState

    def __post_init__(self):
        if self.state.dims not in ((2, 2, 2), (2, 2, 2, 2)):
            raise DimensionError("expected 3 qubits, optionally plus one bath qubit")

    @property
    def has_bath(self):
        return len(self.state.dims) == 4

    def system_state(self):
        """The 3-qubit state when it factorizes from the bath (or has none)."""
        if not self.has_bath:
            return self.state
        m = self.state.amps.reshape(8, 2)
        u, s, vh = np.linalg.svd(m)
        if s[1] > 1e-10:
            raise ValueError("system is entangled with the bath")
        return PureState.from_amplitudes(u[:, 0], (2, 2, 2))


@dataclass(frozen=True)
class SyndromeRecord:
    s1: int
    s2: int
    inferred: str

    def __post_init__(self):
        if SYNDROME_TABLE[(self.s1, self.s2)] != self.inferred:
            raise ValueError("inferred correction does not match the syndrome table")


@dataclass(frozen=True)
class ErrorChannelSpec:
    kind: str
    which: int = 2
    epsilon: complex = 0.0
    bath_overlap: float = 0.0

    def __post_init__(self):
        if self.kind not in ("deterministic", "coherent", "bath"):
            raise ValueError(f"unknown error kind {self.kind!r}")
        if self.which not in (1, 2, 3):
            raise ValueError("error qubit must be 1, 2 or 3")
        if abs(self.epsilon) > 1.0 + 1e-12:
            raise ValueError("|epsilon| must not exceed 1")
        if abs(self.bath_overlap) > 1.0:
            raise ValueError("bath overlap magnitude must not exceed 1")


_G = np.array([0, 1], dtype=complex)  # |0> = |g>
_E = np.array([1, 0], dtype=complex)  # |1> = |e>


def code_state(alpha, beta):
    """``alpha|000> + beta|111>`` written out directly (reference for tests)."""
    amps = alpha * np.kron(np.kron(_G, _G), _G) + beta * np.kron(np.kron(_E, _E), _E)
    return PureState((2, 2, 2), amps)


def encode3(alpha, beta):
    """Encode with two CNOTs acting on ``(alpha|0> + beta|1>)|0>|0>``."""
    psi = PureState((2,), alpha * _G + beta * _E)
    reg = kron(kron(psi, PureState((2,), _G)), PureState((2,), _G))
    reg = cnot(0, 1, 3).apply(reg)
    reg = cnot(0, 2, 3).apply(reg)
    return LogicalQubit3(reg)


def pauli_on(op, which, dims):
    """Single-qubit operator on qubit ``which`` (1-based)."""
    return embed(op, (which - 1,), dims)


def logical_operators():
    """``X_L = X1X2X3``, ``Z_L = Z1Z2Z3`` and ``Y_L = i X_L Z_L`` (8x8)."""
    x = np.kron(np.kron(SX, SX), SX)
    z = np.kron(np.kron(SZ, SZ), SZ)
    return {"X": x, "Y": 1j * x @ z, "Z": z}


def stabilizers(n_factors=3):
    dims = (2,) * n_factors
    s1 = embed(np.kron(SZ, SZ), (0, 1), dims)
    s2 = embed(np.kron(SZ, SZ), (1, 2), dims)
    return s1, s2


def _error_op(label, dims):
    if label == "I":
        return np.eye(int(np.prod(dims)), dtype=complex)
    return pauli_on(SX, int(label[1]), dims)


def syndrome_probabilities(lq):
    """Exact Born probabilities of the four syndromes."""
    s1, s2 = stabilizers(len(lq.state.dims))
    eye = np.eye(s1.shape[0])
    psi = lq.state.amps
    out = {}
    for (a, b) in SYNDROME_TABLE:
        proj = 0.5 * (eye + a * s1) @ (0.5 * (eye + b * s2))
        out[(a, b)] = float(np.real(np.vdot(psi, proj @ psi)))
    return out


def _project(psi, op, value):
    proj = 0.5 * (np.eye(op.shape[0]) + value * op)
    v = proj @ psi
    return v, float(np.real(np.vdot(v, v)))


def measure_stabilizers(lq, rng, order=(0, 1)):
    """Measure S1 then S2 (or ``order=(1, 0)``).  Returns ``(record, collapsed)``."""
    ops = stabilizers(len(lq.state.dims))
    psi = lq.state.amps
    values = [0, 0]
    for k in order:
        v_plus, p_plus = _project(psi, ops[k], +1)
        if rng.random() < p_plus:
            values[k], psi = 1, v_plus / np.sqrt(p_plus)
        else:
            v_minus, p_minus = _project(psi, ops[k], -1)
            values[k], psi = -1, v_minus / np.sqrt(p_minus)
    s1, s2 = values
    record = SyndromeRecord(s1, s2, SYNDROME_TABLE[(s1, s2)])
    return record, LogicalQubit3(PureState.from_amplitudes(psi, lq.state.dims))


def inject_error(lq, spec):
    """Apply a bit-flip error channel to a code state."""
    if lq.has_bath:
        raise ValueError("inject_error expects a state without a bath factor")
    dims = lq.state.dims
    psi = lq.state.amps
    x = pauli_on(SX, spec.which, dims)
    eps = complex(spec.epsilon)
    keep = np.sqrt(1.0 - abs(eps) ** 2)
    if spec.kind == "deterministic":
        return LogicalQubit3(PureState(dims, x @ psi))
    if spec.kind == "coherent":
        # normalization holds because <Psi|X_j|Psi> = 0 on the code space
        return LogicalQubit3(
            PureState.from_amplitudes(keep * psi + eps * (x @ psi), dims, normalize=False)
        )
    s = spec.bath_overlap
    bath0 = _G
    bath2 = s * _G + np.sqrt(1.0 - abs(s) ** 2) * _E
    amps = keep * np.kron(psi, bath0) + eps * np.kron(x @ psi, bath2)
    return LogicalQubit3(PureState.from_amplitudes(amps, dims + (2,), normalize=False))


def apply_correction(lq, label):
    return LogicalQubit3(PureState(lq.state.dims, _error_op(label, lq.state.dims) @ lq.state.amps))


def qec_cycle(lq, rng):
    """Syndrome measurement followed by table-lookup correction."""
    record, collapsed = measure_stabilizers(lq, rng)
    return apply_correction(collapsed, record.inferred), record


def entropy_accounting(epsilon):
    """``(syndrome Shannon entropy, system-bath entanglement before measurement)``.

    Both are computed from the bath-coupled state of a random-looking code
    word; for an orthogonal bath each equals ``H2(|epsilon|^2)``.
    """
    if abs(epsilon) > 1.0 + 1e-12:
        raise ValueError("|epsilon| must not exceed 1")
    lq = inject_error(encode3(0.6, 0.8j), ErrorChannelSpec("bath", 2, epsilon))
    probs = syndrome_probabilities(lq)
    shannon = shannon_entropy(list(probs.values()))
    ent = entanglement_entropy(lq.state, (0, 1, 2))
    return shannon, ent


def expected_accounting(epsilon):
    return binary_entropy(min(abs(epsilon) ** 2, 1.0))


__all__ = [
    "ERROR_SYNDROMES",
    "ErrorChannelSpec",
    "LogicalQubit3",
    "SYNDROME_TABLE",
    "SyndromeRecord",
    "code_state",
    "encode3",
    "entropy_accounting",
    "inject_error",
    "logical_operators",
    "measure_stabilizers",
    "qec_cycle",
    "expected_accounting",
    "repetition_logical_error",
    "repetition_monte_carlo",
    "stabilizers",
    "syndrome_probabilities",
]
