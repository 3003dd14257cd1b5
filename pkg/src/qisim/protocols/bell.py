"""Entanglement protocols over the Bell basis: dense coding, teleportation, CHSH.

Local operations always act on qubit 1 (the first factor).  After the Bell
measurement circuit ``H_1 CNOT_12`` the four Bell states land on signed
computational states::

    B0 -> +|ge>    B1 -> +|ee>    B2 -> -|gg>    B3 -> -|eg>

Teleportation note: the unknown qubit is ``alpha|g> + beta|e>``, but the
branch decomposition and the correction table (B0->X, B1->-iY, B2->I,
B3->Z) both start from ``[alpha|e> + beta|g>]|B0>``.  The two are linked by
an X on the unknown qubit, so Alice applies X before her Bell measurement.
With that step the printed table is exact.
"""

import numpy as np

from ..errors import DimensionError
from ..gates import (
    IDENTITY,
    I_Y,
    MINUS_I_Y,
    PAULI_X,
    PAULI_Z,
    bell_circuit,
    bell_measurement_map,
    bell_state,
)
from ..states import SX, SZ, PureState, embed, expectation, kron

MESSAGES = ("00", "01", "10", "11")
DENSE_CODE_OPS = {"00": PAULI_X, "01": IDENTITY, "10": I_Y, "11": PAULI_Z}
# the Bell state each op produces from B0 (op on qubit 1)
DENSE_CODE_BELL = {"00": 2, "01": 0, "10": 3, "11": 1}
TELEPORT_CORRECTIONS = {0: PAULI_X, 1: MINUS_I_Y, 2: IDENTITY, 3: PAULI_Z}

# computational index after H_1 CNOT_12 -> (Bell label, sign); index = 2*q1 + q2
# with 0 = e and 1 = g on each qubit
_READOUT = {2: (0, +1), 0: (1, +1), 3: (2, -1), 1: (3, -1)}


def _readout(index):
    return _READOUT[int(index)]


def identify_bell(state):
    """Label and sign of a two-qubit state that is exactly ``+-|B_k>``.

    Runs the Bell measurement circuit and requires the output to be a single
    computational basis state (to 1e-12).
    """
    out = bell_measurement_map(state).amps
    idx = int(np.argmax(np.abs(out)))
    if abs(abs(out[idx]) - 1.0) > 1e-12:
        raise ValueError("state is not a Bell basis state")
    k, sign = _readout(idx)
    return k, int(np.sign(out[idx].real)) * sign


# ---------------------------------------------------------------------------
# dense coding


def densecode_encode(msg):
    """Alice's op on qubit 1 of ``|B0>`` for a two-bit message."""
    if msg not in DENSE_CODE_OPS:
        raise ValueError(f"message must be one of {MESSAGES}, got {msg!r}")
    return DENSE_CODE_OPS[msg].apply(bell_state(0), 0)


def densecode_send(msg):
    """Encode, Bell-measure, decode.  Returns the recovered two-bit string."""
    k, _ = identify_bell(densecode_encode(msg))
    for m, kk in DENSE_CODE_BELL.items():
        if kk == k:
            return m
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# teleportation


def _resource(unknown):
    if unknown.dims != (2,):
        raise DimensionError("teleport needs a single-qubit input")
    prepared = PAULI_X.apply(unknown)
    return kron(prepared, bell_state(0))


def teleport_branches(unknown):
    """Bob's unnormalized state for each Bell outcome of Alice's pair.

    Returns a 4x2 array ``c`` with ``|Psi> = sum_k |B_k>_{12} (c[k])_3``.
    """
    psi = _resource(unknown).amps.reshape(4, 2)
    return np.array([bell_state(k).amps.conj() @ psi for k in range(4)])


def teleport(unknown, rng):
    """Teleport a qubit.  Returns ``(bob_state, bell_outcome, correction_label)``."""
    full = _resource(unknown)
    after = full.evolve(embed(bell_circuit().matrix, (0, 1), full.dims)).amps.reshape(4, 2)
    probs = np.sum(np.abs(after) ** 2, axis=1)
    idx = int(rng.choice(4, p=probs / probs.sum()))
    k, _ = _readout(idx)
    bob = PureState.from_amplitudes(after[idx], (2,))
    op = TELEPORT_CORRECTIONS[k]
    return op.apply(bob), k, op.label


# ---------------------------------------------------------------------------
# CHSH

X_PRIME = (SZ + SX) / np.sqrt(2)
Z_PRIME = (SZ - SX) / np.sqrt(2)
ALICE_AXES = {"X": SX, "Z": SZ}
BOB_AXES = {"X'": X_PRIME, "Z'": Z_PRIME}
# (Alice, Bob, sign) for S = <XX'> + <ZZ'> - <XZ'> + <ZX'>
CHSH_TERMS = (("X", "X'", 1), ("Z", "Z'", 1), ("X", "Z'", -1), ("Z", "X'", 1))


def _check2(state):
    if state.dims != (2, 2):
        raise DimensionError("CHSH needs a two-qubit state")


def chsh_correlators(state):
    _check2(state)
    return {
        (a, b): expectation(np.kron(ALICE_AXES[a], BOB_AXES[b]), state)
        for a, b, _ in CHSH_TERMS
    }


def chsh_expectation(state):
    """Exact S from the four correlators."""
    corr = chsh_correlators(state)
    return float(sum(sign * corr[(a, b)] for a, b, sign in CHSH_TERMS))


def _joint_outcome_probs(state, oa, ob):
    """P(s, t) for outcomes s, t in (+1, -1) of the two local observables."""
    probs = np.empty(4)
    for i, s in enumerate((1, -1)):
        pa = 0.5 * (np.eye(2) + s * oa)
        for j, t in enumerate((1, -1)):
            pb = 0.5 * (np.eye(2) + t * ob)
            probs[2 * i + j] = np.real(np.vdot(state.amps, np.kron(pa, pb) @ state.amps))
    probs = np.clip(probs, 0.0, None)
    return probs / probs.sum()


def chsh_sample(state, n_trials, rng):
    """Monte-Carlo S.  Returns ``(estimate, standard_error)``.

    Each trial picks one of the four setting pairs uniformly, measures both
    qubits projectively and records ``4 * sign * s * t``; the mean of that
    is an unbiased estimator of S.
    """
    _check2(state)
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    tables = [
        _joint_outcome_probs(state, ALICE_AXES[a], BOB_AXES[b]) for a, b, _ in CHSH_TERMS
    ]
    pairs = rng.integers(0, 4, size=n_trials)
    u = rng.random(n_trials)
    cdf = np.cumsum(np.array(tables), axis=1)
    outcome = np.minimum((u[:, None] >= cdf[pairs]).sum(axis=1), 3)
    # outcome index 2*i + j with i, j = 0 for +1 and 1 for -1
    prod = np.where(outcome // 2 == outcome % 2, 1.0, -1.0)
    signs = np.array([t[2] for t in CHSH_TERMS], dtype=float)[pairs]
    samples = 4.0 * signs * prod
    est = float(samples.mean())
    se = float(samples.std(ddof=1) / np.sqrt(n_trials)) if n_trials > 1 else float("inf")
    return est, se
