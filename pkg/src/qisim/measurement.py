"""Projective measurements and the Stern-Gerlach pointer model.

Projective measurements sample the Born rule and collapse the state onto the
observed eigenspace, so repeating the same measurement is deterministic.

The pointer model entangles a spin with a 1-D position wave packet: the up
component is displaced to ``+d`` and the down component to ``-d``.  Both
packets are real Gaussians of width ``sigma`` (``|Phi|^2`` has standard
deviation ``sigma``), so their overlap is ``exp(-d^2 / (2 sigma^2))``.
Reading the position ``R`` either partially (weak, ``d << sigma``) or fully
(strong, ``d/sigma >= 8``) collapses the spin.
"""

from dataclasses import dataclass, field

import numpy as np

from .constants import STATE_TOL
from .errors import ConditioningError, DimensionError, InvalidDensityError
from .gates import MeasurementAxis, pauli_axis
from .states import DensityMatrix, PureState, embed


@dataclass(frozen=True)
class MeasurementOutcome:
    value: int
    post_state: PureState
    probability: float


def _projector(n, sign):
    return 0.5 * (np.eye(2) + sign * pauli_axis(n).mat)


def outcome_probabilities(state, qubit, n):
    """Born probabilities ``(p(+1), p(-1))`` for measuring ``n.sigma`` on ``qubit``."""
    if not 0 <= qubit < state.n_factors or state.dims[qubit] != 2:
        raise DimensionError(f"invalid qubit index {qubit}")
    p_plus = float(
        np.real(np.vdot(state.amps, embed(_projector(n, +1), (qubit,), state.dims) @ state.amps))
    )
    p_plus = min(max(p_plus, 0.0), 1.0)
    return p_plus, 1.0 - p_plus


def project(state, qubit, n, value):
    """Post-measurement state for outcome ``value`` (no sampling)."""
    proj = embed(_projector(n, value), (qubit,), state.dims)
    amps = proj @ state.amps
    norm = np.linalg.norm(amps)
    if norm < 1e-15:
        raise ConditioningError(f"outcome {value} has zero probability")
    return PureState(state.dims, amps / norm)


def measure_axis(state, qubit, n, rng):
    """QND measurement of ``n . sigma`` on one qubit with Born-rule sampling."""
    p_plus, p_minus = outcome_probabilities(state, qubit, n)
    value = 1 if rng.random() < p_plus else -1
    prob = p_plus if value == 1 else p_minus
    return MeasurementOutcome(value, project(state, qubit, n, value), prob)


def measure_batch(amps, theta, phi, rng):
    """Measure many independent single qubits at once.

    ``amps`` has shape ``(n, 2)``; ``theta``/``phi`` are scalars or arrays of
    length ``n``.  Returns ``(outcomes, post_amps)`` with outcomes in
    ``{+1, -1}`` and ``post_amps`` the collapsed eigenstates.  The
    eigenvectors used are exactly those of :func:`qisim.gates.spin_eigenstates`.
    """
    amps = np.asarray(amps, dtype=complex)
    n = amps.shape[0]
    theta = np.broadcast_to(np.asarray(theta, dtype=float), (n,))
    phi = np.broadcast_to(np.asarray(phi, dtype=float), (n,))
    plus, minus = batch_eigenstates(theta, phi)
    p_plus = np.abs(np.sum(plus.conj() * amps, axis=1)) ** 2
    outcomes = np.where(rng.random(n) < p_plus, 1, -1)
    post = np.where((outcomes == 1)[:, None], plus, minus)
    return outcomes, post


def batch_eigenstates(theta, phi):
    """Rows of ``n.sigma`` eigenvectors (``+1`` rows, ``-1`` rows)."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    em, ep = np.exp(-0.5j * phi), np.exp(0.5j * phi)
    plus = np.stack([c * em, s * ep], axis=-1)
    minus = np.stack([-s * em, c * ep], axis=-1)
    return plus, minus


# ---------------------------------------------------------------------------
# Stern-Gerlach pointer model


@dataclass(frozen=True)
class PointerModel:
    """Gaussian pointer packets at ``+separation`` (up) and ``-separation`` (down)."""

    separation: float
    width: float
    n_points: int = 2048
    coverage: float = 6.0
    grid: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError("pointer width must be positive")
        if self.separation < 0:
            raise ValueError("separation must be non-negative")
        half = self.separation + self.coverage * self.width
        grid = np.linspace(-half, half, self.n_points)
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)

    @property
    def spacing(self):
        return float(self.grid[1] - self.grid[0])

    def phi_up(self, r):
        return self._packet(np.asarray(r, dtype=float) - self.separation)

    def phi_down(self, r):
        return self._packet(np.asarray(r, dtype=float) + self.separation)

    def _packet(self, x):
        s = self.width
        return (2 * np.pi * s**2) ** -0.25 * np.exp(-(x**2) / (4 * s**2))

    def overlap(self):
        """``<Phi_up|Phi_down>`` from the closed-form Gaussian integral."""
        return float(np.exp(-self.separation**2 / (2 * self.width**2)))

    def overlap_on_grid(self):
        """Same overlap by Riemann sum on the grid (independent check)."""
        g = self.grid
        return float(np.sum(self.phi_up(g) * self.phi_down(g)) * self.spacing)

    def check_normalized(self, tol=1e-6):
        g = self.grid
        for f in (self.phi_up, self.phi_down):
            mass = float(np.sum(f(g) ** 2) * self.spacing)
            if abs(mass - 1.0) > tol:
                raise InvalidDensityError(f"pointer packet mass {mass} deviates from 1")
        return True


def _check_amplitudes(alpha, beta):
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > STATE_TOL:
        raise ValueError("|alpha|^2 + |beta|^2 must equal 1")


def _check_in_grid(pm, r):
    r = np.asarray(r, dtype=float)
    lo, hi = pm.grid[0], pm.grid[-1]
    if np.any(r < lo - 1e-12) or np.any(r > hi + 1e-12):
        raise ValueError(f"position outside the pointer grid [{lo}, {hi}]")
    return r


def pointer_probability(alpha, beta, pm, r):
    """``P(R) = |alpha|^2 |Phi_up(R)|^2 + |beta|^2 |Phi_down(R)|^2``."""
    _check_amplitudes(alpha, beta)
    r = _check_in_grid(pm, r)
    return abs(alpha) ** 2 * pm.phi_up(r) ** 2 + abs(beta) ** 2 * pm.phi_down(r) ** 2


def conditional_amplitudes(alpha, beta, pm, r):
    """Normalized ``(alpha Phi_up(R), beta Phi_down(R)) / sqrt(P(R))``; vectorized in ``r``."""
    p = pointer_probability(alpha, beta, pm, r)
    if np.any(p <= 0):
        raise ConditioningError("P(R) = 0: conditioning on an impossible result")
    root = np.sqrt(p)
    return np.stack([alpha * pm.phi_up(r) / root, beta * pm.phi_down(r) / root], axis=-1)


def conditional_state(alpha, beta, pm, r):
    """Spin state conditioned on reading the pointer at ``r`` (always pure)."""
    amps = conditional_amplitudes(alpha, beta, pm, float(r))
    return PureState.from_amplitudes(amps, (2,))


def unconditional_rho(alpha, beta, overlap):
    """Spin density matrix after the pointer is traced out.

    Off-diagonal coherence is multiplied by ``<Phi_up|Phi_down>``.
    """
    _check_amplitudes(alpha, beta)
    if abs(overlap) > 1.0 + 1e-12:
        raise ValueError("pointer overlap magnitude cannot exceed 1")
    off = alpha * np.conj(beta) * overlap
    mat = np.array([[abs(alpha) ** 2, off], [np.conj(off), abs(beta) ** 2]])
    return DensityMatrix((2,), mat)


def reconstruct_unconditional(alpha, beta, pm, tol=1e-6):
    """Average the conditional density matrices over pointer outcomes on the grid."""
    _check_amplitudes(alpha, beta)
    g = pm.grid
    p = pointer_probability(alpha, beta, pm, g)
    weights = p * pm.spacing
    mass = float(weights.sum())
    if abs(mass - 1.0) > tol:
        raise InvalidDensityError(f"grid misses probability mass ({1 - mass:.3e})")
    keep = p > 0
    amps = conditional_amplitudes(alpha, beta, pm, g[keep])
    mat = np.einsum("r,ri,rj->ij", weights[keep], amps, amps.conj())
    return DensityMatrix((2,), 0.5 * (mat + mat.conj().T) / np.trace(mat).real)


def sample_pointer(alpha, beta, pm, rng, size=None):
    """Draw pointer positions from ``P(R)`` by inverse CDF on the grid."""
    _check_amplitudes(alpha, beta)
    g = pm.grid
    p = pointer_probability(alpha, beta, pm, g)
    cdf = np.concatenate([[0.0], np.cumsum(0.5 * (p[1:] + p[:-1]) * np.diff(g))])
    cdf /= cdf[-1]
    u = rng.random(size)
    return np.interp(u, cdf, g)


def polarization(state):
    """Bloch vector ``(<sx>, <sy>, <sz>)`` of a single-qubit pure state."""
    a, b = state.amps
    cross = np.conj(a) * b
    return np.array([2 * cross.real, 2 * cross.imag, abs(a) ** 2 - abs(b) ** 2])


__all__ = [
    "MeasurementAxis",
    "MeasurementOutcome",
    "PointerModel",
    "conditional_state",
    "measure_axis",
    "measure_batch",
    "pointer_probability",
    "reconstruct_unconditional",
    "sample_pointer",
    "unconditional_rho",
]
