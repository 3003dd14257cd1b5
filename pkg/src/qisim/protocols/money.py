"""Wiesner-style quantum money.

The bank encodes each qubit of a bill as an eigenstate of either sigma^z or
sigma^x with a random sign and keeps the (axis, sign) list secret.  Genuine
bills always verify because verification is a QND projection onto the
recorded eigenstate.  A counterfeiter who measures each qubit on a guessed
axis and re-prepares what was seen passes each qubit with probability 3/4,
so an N-qubit forgery passes with probability (3/4)^N.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..gates import MeasurementAxis, spin_eigenstates
from ..measurement import batch_eigenstates, measure_batch, outcome_probabilities, project
from ..rng import child_rng
from ..states import PureState

AXES = {"Z": MeasurementAxis(0.0, 0.0), "X": MeasurementAxis(np.pi / 2, 0.0)}
# polar angle of each bank axis in the xz-plane
_AXIS_ANGLE = {"Z": 0.0, "X": np.pi / 2}

BATCH_CHUNK = 10_000


@dataclass(frozen=True)
class QuantumBill:
    classical_serial: int
    secret: Tuple[Tuple[str, int], ...]
    qubits: Tuple[PureState, ...]

    def __post_init__(self):
        if len(self.secret) != len(self.qubits):
            raise ValueError("one secret entry per qubit required")

    @property
    def n_qubits(self):
        return len(self.qubits)


def _eigenstate(axis, sign):
    plus, minus = spin_eigenstates(AXES[axis].theta, AXES[axis].phi)
    return plus if sign > 0 else minus


def money_issue(n_qubits, rng, serial=None):
    """Mint a bill with i.i.d. uniform axes and signs."""
    if n_qubits < 1:
        raise ValueError("a bill needs at least one qubit")
    axes = rng.integers(0, 2, size=n_qubits)
    signs = rng.integers(0, 2, size=n_qubits)
    if serial is None:
        serial = int(rng.integers(0, 2**31))
    secret = tuple(("Z" if a == 0 else "X", 1 if s else -1) for a, s in zip(axes, signs))
    qubits = tuple(_eigenstate(ax, sg) for ax, sg in secret)
    return QuantumBill(int(serial), secret, qubits)


def money_verify_detail(bill, secret=None, rng=None):
    """Verify and also return the post-measurement bill.

    ``rng`` is only consulted when an outcome is genuinely random; genuine
    bills never need it.
    """
    secret = bill.secret if secret is None else tuple(secret)
    if len(secret) != bill.n_qubits:
        raise ValueError(f"secret has {len(secret)} entries, bill has {bill.n_qubits} qubits")
    ok = True
    post = []
    for q, (axis, sign) in zip(bill.qubits, secret):
        p_plus, _ = outcome_probabilities(q, 0, AXES[axis])
        p_sign = p_plus if sign > 0 else 1.0 - p_plus
        if p_sign >= 1.0 - 1e-12:
            value = sign
        elif p_sign <= 1e-12:
            value = -sign
        else:
            if rng is None:
                raise ValueError("random verification outcome needs an rng")
            value = sign if rng.random() < p_sign else -sign
        ok = ok and value == sign
        post.append(project(q, 0, AXES[axis], value))
    return ok, QuantumBill(bill.classical_serial, bill.secret, tuple(post))


def money_verify(bill, secret=None, rng=None):
    """True iff every qubit measured along its recorded axis gives the recorded sign."""
    return money_verify_detail(bill, secret, rng)[0]


def _forger_axes(strategy):
    """Polar angles (xz-plane) of the two orthogonal axes the forger guesses between."""
    if strategy in (None, "paper_axes"):
        gamma = 0.0
    elif isinstance(strategy, (int, float)):
        gamma = float(strategy)
    elif isinstance(strategy, tuple) and strategy[0] == "rotated_axes":
        gamma = float(strategy[1])
    else:
        raise ValueError(f"unknown counterfeiting strategy {strategy!r}")
    return gamma, gamma + np.pi / 2


def money_counterfeit(bill, strategy="paper_axes", rng=None):
    """Measure-and-reprepare forgery.

    ``strategy`` is ``"paper_axes"`` (guess Z or X) or
    ``("rotated_axes", angle)`` for an orthogonal pair rotated by ``angle``
    in the xz-plane.
    """
    axes = _forger_axes(strategy)
    forged = []
    for q in bill.qubits:
        angle = axes[int(rng.integers(0, 2))]
        outcomes, post = measure_batch(q.amps[None, :], angle, 0.0, rng)
        forged.append(PureState((2,), post[0]))
    return QuantumBill(bill.classical_serial, bill.secret, tuple(forged))


def _batch_bank_states(rng, trials, n_qubits):
    axes = rng.integers(0, 2, size=(trials, n_qubits))
    signs = np.where(rng.integers(0, 2, size=(trials, n_qubits)) == 1, 1, -1)
    theta = np.where(axes == 0, _AXIS_ANGLE["Z"], _AXIS_ANGLE["X"])
    plus, minus = batch_eigenstates(theta, 0.0)
    amps = np.where((signs == 1)[..., None], plus, minus)
    return theta, signs, amps


def _counterfeit_chunk(rng, trials, n_qubits, strategy):
    theta, signs, amps = _batch_bank_states(rng, trials, n_qubits)
    axes = np.array(_forger_axes(strategy))
    guess = axes[rng.integers(0, 2, size=(trials, n_qubits))]
    _, forged = measure_batch(amps.reshape(-1, 2), guess.reshape(-1), 0.0, rng)
    seen, _ = measure_batch(forged, theta.reshape(-1), 0.0, rng)
    ok = (seen.reshape(trials, n_qubits) == signs).all(axis=1)
    return int(ok.sum())


def _genuine_chunk(rng, trials, n_qubits):
    theta, signs, amps = _batch_bank_states(rng, trials, n_qubits)
    seen, _ = measure_batch(amps.reshape(-1, 2), theta.reshape(-1), 0.0, rng)
    return int((seen.reshape(trials, n_qubits) == signs).all(axis=1).sum())


def _chunks(trials):
    k = 0
    while trials > 0:
        size = min(trials, BATCH_CHUNK)
        yield k, size
        trials -= size
        k += 1


def counterfeit_pass_count(n_qubits, trials, seed, strategy="paper_axes"):
    """Number of forged bills (out of ``trials``) that pass verification.

    Vectorized equivalent of issue -> counterfeit -> verify; each chunk of
    trials draws from its own counter-derived stream.
    """
    return sum(
        _counterfeit_chunk(child_rng(seed, k), size, n_qubits, strategy)
        for k, size in _chunks(trials)
    )


def genuine_pass_count(n_qubits, trials, seed):
    return sum(_genuine_chunk(child_rng(seed, k), size, n_qubits) for k, size in _chunks(trials))


def counterfeit_pass_probability(n_qubits):
    """Closed form ``(3/4)^N``."""
    return 0.75**n_qubits
