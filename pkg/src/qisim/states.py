"""Pure states, density matrices, tensor products, partial traces and entropies.

Basis convention: for every qubit factor index 0 is the excited state
``|1> = |up> = |e>`` and index 1 is the ground state ``|0> = |down> = |g>``,
i.e. ``|up> = (1, 0)^T`` and ``|down> = (0, 1)^T``.  Composite indices are
big-endian in factor order (factor 0 is the slowest-varying index).
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence, Tuple

import numpy as np

from .constants import IMAG_TOL, MAX_DIM, PROB_TOL, PSD_TOL, STATE_TOL
from .errors import (
    CapacityError,
    DimensionError,
    InvalidDensityError,
    NotHermitianError,
    NotNormalizedError,
)
from .linalg import check_hermitian, eigendecompose_hermitian, eigvals_hermitian

# Pauli matrices in the |up>, |down> basis
I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (I2, SX, SY, SZ)
PAULI_LABELS = ("I", "X", "Y", "Z")


def _frozen(arr):
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


def _dims(dims, size):
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise DimensionError(f"factor dimensions must be positive, got {dims}")
    if int(np.prod(dims)) != size:
        raise DimensionError(f"dims {dims} do not multiply to {size}")
    return dims


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over a tensor product of factors."""

    dims: Tuple[int, ...]
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "dims", _dims(self.dims, amps.size))
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > STATE_TOL:
            raise NotNormalizedError(f"state norm^2 = {norm2!r}, expected 1")
        object.__setattr__(self, "amps", _frozen(amps))

    @classmethod
    def from_amplitudes(cls, amps, dims=None, normalize=True):
        """Build a state, rescaling to unit norm unless ``normalize=False``."""
        amps = np.asarray(amps, dtype=complex).reshape(-1)
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise NotNormalizedError("cannot normalize the zero vector")
            amps = amps / norm
        if dims is None:
            n = int(round(np.log2(amps.size)))
            if 2**n != amps.size:
                raise DimensionError("dims required for non-qubit registers")
            dims = (2,) * n
        return cls(tuple(dims), amps)

    @classmethod
    def basis(cls, index, dims):
        dims = tuple(dims)
        amps = np.zeros(int(np.prod(dims)), dtype=complex)
        amps[index] = 1.0
        return cls(dims, amps)

    @classmethod
    def from_labels(cls, labels):
        """Qubit product state from a string over ``u/d``, ``e/g``, ``1/0``.

        ``'ud'`` is ``|up, down>``; ``'ge'`` is ``|g, e>``.
        """
        vecs = []
        for ch in labels:
            if ch in "ue1":
                vecs.append(np.array([1, 0], dtype=complex))
            elif ch in "dg0":
                vecs.append(np.array([0, 1], dtype=complex))
            else:
                raise ValueError(f"unknown qubit label {ch!r}")
        return cls((2,) * len(vecs), reduce(np.kron, vecs))

    @property
    def n_factors(self):
        return len(self.dims)

    @property
    def dim(self):
        return self.amps.size

    def density(self):
        return DensityMatrix(self.dims, np.outer(self.amps, self.amps.conj()))

    def overlap(self, other):
        """``<self|other>``."""
        _check_same_dims(self.dims, other.dims)
        return complex(np.vdot(self.amps, other.amps))

    def fidelity(self, other):
        """``|<self|other>|^2`` (insensitive to global phase)."""
        return abs(self.overlap(other)) ** 2

    def evolve(self, unitary):
        """Apply a full-register matrix (or anything with a ``.matrix``)."""
        mat = np.asarray(getattr(unitary, "matrix", unitary), dtype=complex)
        if mat.shape != (self.dim, self.dim):
            raise DimensionError(f"operator shape {mat.shape} vs state dim {self.dim}")
        return PureState.from_amplitudes(mat @ self.amps, self.dims)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amps, dtype=dtype)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix."""

    dims: Tuple[int, ...]
    mat: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionError(f"density matrix must be square, got {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise ValueError("density matrix entries must be finite")
        object.__setattr__(self, "dims", _dims(self.dims, mat.shape[0]))
        if np.max(np.abs(mat - mat.conj().T)) > STATE_TOL:
            raise NotHermitianError("density matrix is not Hermitian")
        tr = np.trace(mat).real
        if abs(tr - 1.0) > STATE_TOL:
            raise InvalidDensityError(f"trace = {tr!r}, expected 1")
        lam_min = eigvals_hermitian(mat)[0]
        if lam_min < -PSD_TOL:
            raise InvalidDensityError(f"negative eigenvalue {lam_min!r}")
        object.__setattr__(self, "mat", _frozen(mat))

    @classmethod
    def maximally_mixed(cls, dims):
        dims = tuple(dims)
        d = int(np.prod(dims))
        return cls(dims, np.eye(d) / d)

    @classmethod
    def from_ensemble(cls, probs, states):
        """``sum_j P_j |psi_j><psi_j|``; the states need not be orthogonal."""
        probs = _check_probs(probs)
        if len(probs) != len(states):
            raise DimensionError("one probability per state required")
        dims = states[0].dims
        mat = sum(p * np.outer(s.amps, s.amps.conj()) for p, s in zip(probs, states))
        return cls(dims, mat)

    @classmethod
    def from_bloch(cls, m):
        return bloch_to_density(m)

    @property
    def dim(self):
        return self.mat.shape[0]

    def purity(self):
        return float(np.real(np.trace(self.mat @ self.mat)))

    def is_pure(self, tol=1e-9):
        """``rho^2 == rho`` entrywise within ``tol``."""
        return bool(np.max(np.abs(self.mat @ self.mat - self.mat)) < tol)

    def eigenvalues(self):
        return eigvals_hermitian(self.mat)


@dataclass(frozen=True)
class BlochVector:
    """Single-qubit polarization ``m = <sigma>``, ``|m| <= 1``."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if self.length > 1.0 + STATE_TOL:
            raise ValueError(f"Bloch vector length {self.length} exceeds 1")

    @property
    def vector(self):
        return np.array([self.x, self.y, self.z])

    @property
    def length(self):
        return float(np.sqrt(self.x**2 + self.y**2 + self.z**2))


@dataclass(frozen=True)
class HermitianOperator:
    """An observable / Hamiltonian; ``dims`` is optional bookkeeping."""

    mat: np.ndarray = field(repr=False)
    dims: Tuple[int, ...] = ()

    def __post_init__(self):
        mat = check_hermitian(self.mat)
        dims = self.dims or _default_dims(mat.shape[0])
        object.__setattr__(self, "dims", _dims(dims, mat.shape[0]))
        object.__setattr__(self, "mat", _frozen(mat))

    @property
    def dim(self):
        return self.mat.shape[0]

    def eigh(self):
        return eigendecompose_hermitian(self.mat)


def _default_dims(d):
    n = int(round(np.log2(d))) if d > 0 else 0
    return (2,) * n if n > 0 and 2**n == d else (d,)


def _check_same_dims(a, b):
    if tuple(a) != tuple(b):
        raise DimensionError(f"dimension mismatch: {a} vs {b}")


def _check_probs(p):
    p = np.asarray(p, dtype=float).reshape(-1)
    if np.any(p < -PROB_TOL):
        raise NotNormalizedError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > PROB_TOL:
        raise NotNormalizedError(f"probabilities sum to {p.sum()!r}, expected 1")
    return np.clip(p, 0.0, None)


# ---------------------------------------------------------------------------
# tensor products


def kron(a, b, max_dim=MAX_DIM):
    """Tensor product of two states, two density matrices or two operators.

    Factor ordering is left-to-right: ``a`` supplies the slow index.
    """
    if isinstance(a, PureState) and isinstance(b, PureState):
        _check_capacity(a.dim * b.dim, max_dim)
        return PureState(a.dims + b.dims, np.kron(a.amps, b.amps))
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        _check_capacity(a.dim * b.dim, max_dim)
        return DensityMatrix(a.dims + b.dims, np.kron(a.mat, b.mat))
    if isinstance(a, HermitianOperator) and isinstance(b, HermitianOperator):
        _check_capacity(a.dim * b.dim, max_dim)
        return HermitianOperator(np.kron(a.mat, b.mat), a.dims + b.dims)
    if isinstance(a, (PureState, DensityMatrix, HermitianOperator)) or isinstance(
        b, (PureState, DensityMatrix, HermitianOperator)
    ):
        raise TypeError("kron operands must be of the same kind")
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _check_capacity(a.shape[0] * b.shape[0], max_dim)
    return np.kron(a, b)


def kron_all(items, max_dim=MAX_DIM):
    return reduce(lambda x, y: kron(x, y, max_dim=max_dim), items)


def _check_capacity(dim, max_dim):
    if dim > max_dim:
        raise CapacityError(f"dimension {dim} exceeds configured maximum {max_dim}")


def embed(op, targets, dims):
    """Lift an operator acting on factors ``targets`` to the full register.

    ``targets`` must be in increasing order and contiguous targets are the
    common case; non-contiguous targets are handled by permuting axes.
    """
    dims = tuple(dims)
    targets = tuple(int(t) for t in targets)
    op = np.asarray(op, dtype=complex)
    if len(set(targets)) != len(targets) or any(t < 0 or t >= len(dims) for t in targets):
        raise DimensionError(f"invalid target factors {targets} for dims {dims}")
    sub = int(np.prod([dims[t] for t in targets]))
    if op.shape != (sub, sub):
        raise DimensionError(f"operator shape {op.shape} does not match targets")
    rest = [k for k in range(len(dims)) if k not in targets]
    full = np.kron(op, np.eye(int(np.prod([dims[k] for k in rest])) if rest else 1))
    # full acts on the ordering (targets..., rest...); permute back
    order = list(targets) + rest
    nd = len(dims)
    perm_dims = [dims[k] for k in order]
    full = full.reshape(perm_dims * 2)
    inv = np.argsort(order)
    full = full.transpose(list(inv) + [nd + i for i in inv])
    d = int(np.prod(dims))
    return full.reshape(d, d)


# ---------------------------------------------------------------------------
# expectation values, partial trace


def _as_density(rho):
    if isinstance(rho, PureState):
        return rho.density()
    return rho


def expectation(o, rho):
    """``Tr{O rho}`` as a real number; ``rho`` may be a pure state."""
    rho = _as_density(rho)
    mat = o.mat if isinstance(o, HermitianOperator) else check_hermitian(o)
    if mat.shape != rho.mat.shape:
        raise DimensionError(f"operator {mat.shape} vs density matrix {rho.mat.shape}")
    val = np.trace(mat @ rho.mat)
    if abs(val.imag) > IMAG_TOL * max(1.0, abs(val.real)):
        raise NotHermitianError(f"expectation has imaginary part {val.imag!r}")
    return float(val.real)


def partial_trace(rho, keep):
    """Reduced density matrix over the factors listed in ``keep``."""
    rho = _as_density(rho)
    keep = sorted(set(int(k) for k in keep))
    n = len(rho.dims)
    if not keep:
        raise DimensionError("keep set must be non-empty")
    if any(k < 0 or k >= n for k in keep):
        raise DimensionError(f"factor index out of range in {keep} for {n} factors")
    dims = rho.dims
    t = rho.mat.reshape(dims * 2)
    traced = [k for k in range(n) if k not in keep]
    # contract traced factors pairwise; track the remaining axis labels
    labels = list(range(2 * n))
    for k in traced:
        labels[n + k] = labels[k]
    out = [k for k in keep] + [n + k for k in keep]
    red = np.einsum(t, labels, out)
    d = int(np.prod([dims[k] for k in keep]))
    return DensityMatrix(tuple(dims[k] for k in keep), red.reshape(d, d))


# ---------------------------------------------------------------------------
# entropies (bits)


def _h(p):
    p = np.asarray(p, dtype=float)
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p))) + 0.0


def shannon_entropy(p):
    """Shannon entropy in bits, with ``0 log 0 = 0``."""
    return _h(_check_probs(p))


def binary_entropy(p):
    """``H2(p) = -p log2 p - (1-p) log2 (1-p)``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    return _h([p, 1.0 - p])


def von_neumann_entropy(rho):
    """``-Tr rho log2 rho`` evaluated on the eigenvalues."""
    rho = _as_density(rho)
    lam = eigvals_hermitian(rho.mat)
    if lam[0] < -PSD_TOL:
        raise InvalidDensityError(f"negative eigenvalue {lam[0]!r}")
    lam = np.clip(lam, 0.0, None)
    s = _h(lam)
    return min(max(s, 0.0), float(np.log2(rho.dim)))


def entanglement_entropy(state, part=(0,)):
    """Entropy of the reduced state of ``part`` for a bipartite pure state."""
    return von_neumann_entropy(partial_trace(state.density(), part))


def entropy_from_polarization(m):
    """Entropy of a qubit with Bloch-vector length ``m`` (binary entropy of (1+m)/2)."""
    if not 0.0 <= m <= 1.0:
        raise ValueError(f"polarization {m} outside [0, 1]")
    return _h([(1.0 + m) / 2.0, (1.0 - m) / 2.0])


# ---------------------------------------------------------------------------
# Pauli representations


def pauli_decompose_1q(rho):
    """Bloch vector ``m_k = Tr{sigma_k rho}`` of a single-qubit state."""
    rho = _as_density(rho)
    if rho.mat.shape != (2, 2):
        raise DimensionError("single-qubit density matrix required")
    m = [float(np.real(np.trace(s @ rho.mat))) for s in (SX, SY, SZ)]
    return BlochVector(*m)


def bloch_to_density(m):
    """``(I + m . sigma) / 2``."""
    v = m.vector if isinstance(m, BlochVector) else np.asarray(m, dtype=float)
    return DensityMatrix((2,), 0.5 * (I2 + v[0] * SX + v[1] * SY + v[2] * SZ))


def pauli_decompose_2q(rho):
    """4x4 table of correlators ``<Q_j^(1) Q_k^(2)>`` with ``Q = (I, X, Y, Z)``."""
    rho = _as_density(rho)
    if rho.mat.shape != (4, 4):
        raise DimensionError("two-qubit density matrix required")
    table = np.empty((4, 4))
    for j, qj in enumerate(PAULIS):
        for k, qk in enumerate(PAULIS):
            table[j, k] = np.real(np.trace(np.kron(qj, qk) @ rho.mat))
    return table


def density_from_correlators(table):
    """Inverse of :func:`pauli_decompose_2q`: ``(1/4) sum <QjQk> Qj Qk``."""
    table = np.asarray(table, dtype=float)
    mat = sum(
        table[j, k] * np.kron(PAULIS[j], PAULIS[k]) for j in range(4) for k in range(4)
    )
    return DensityMatrix((2, 2), mat / 4.0)


# ---------------------------------------------------------------------------
# thermal states


def thermal_density_matrix(h, beta):
    """``exp(-beta H) / Z`` built from the eigendecomposition of ``H``."""
    if beta < 0:
        raise ValueError("beta must be non-negative")
    op = h if isinstance(h, HermitianOperator) else HermitianOperator(h)
    evals, evecs = op.eigh()
    w = np.exp(-beta * (evals - evals[0]))
    w /= w.sum()
    mat = (evecs * w[np.newaxis, :]) @ evecs.conj().T
    return DensityMatrix(op.dims, 0.5 * (mat + mat.conj().T))


def random_pure_state(dims, rng):
    """Haar-random pure state (complex Gaussian amplitudes)."""
    dims = tuple(dims)
    d = int(np.prod(dims))
    z = rng.normal(size=d) + 1j * rng.normal(size=d)
    return PureState.from_amplitudes(z, dims)


def random_density_matrix(dims, rng, rank=None):
    """Random mixed state ``G G^dag / Tr`` with ``G`` of the given rank."""
    dims = tuple(dims)
    d = int(np.prod(dims))
    rank = d if rank is None else rank
    g = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    mat = g @ g.conj().T
    mat /= np.trace(mat).real
    return DensityMatrix(dims, 0.5 * (mat + mat.conj().T))


def product_state(states: Sequence[PureState]):
    return kron_all(list(states))


def schmidt_coefficients(state, part):
    """Schmidt coefficients of a pure state across ``part`` | rest."""
    part = sorted(set(int(k) for k in part))
    rest = [k for k in range(state.n_factors) if k not in part]
    t = state.amps.reshape(state.dims).transpose(part + rest)
    da = int(np.prod([state.dims[k] for k in part]))
    return np.linalg.svd(t.reshape(da, -1), compute_uv=False)


def schmidt_rank(state, part, tol=1e-10):
    return int(np.count_nonzero(schmidt_coefficients(state, part) > tol))
