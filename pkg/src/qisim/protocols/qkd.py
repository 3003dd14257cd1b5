"""One-time pad and the BB84 key distribution protocol.

Bit mapping for BB84 states: ``+Z`` and ``+X`` encode 1, ``-Z`` and ``-X``
encode 0.  The optional eavesdropper does intercept-resend with a uniformly
random Z/X basis per qubit.  After sifting, Bob picks ``m_test`` of the
sifted positions uniformly without replacement and the two parties compare
them publicly; any disagreement means the key is discarded.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ProtocolAbort
from ..measurement import batch_eigenstates, measure_batch
from ..rng import child_rng

# polar angle of the basis axis in the xz-plane: 0 -> Z, 1 -> X
_THETA = np.array([0.0, np.pi / 2])


def _as_bits(x):
    x = np.asarray(x, dtype=np.uint8).reshape(-1)
    if np.any(x > 1):
        raise ValueError("bits must be 0 or 1")
    return x


def otp_encrypt(message, pad):
    """``E_j = M_j xor P_j``."""
    m = _as_bits(message)
    p = _as_bits(pad)
    if p.size < m.size:
        raise ValueError(f"pad of length {p.size} is shorter than message {m.size}")
    return m ^ p[: m.size]


def otp_decrypt(cipher, pad):
    """``D_j = E_j xor P_j = M_j``."""
    return otp_encrypt(cipher, pad)


@dataclass(frozen=True)
class BB84Session:
    n_raw: int
    alice_bits: np.ndarray
    alice_axes: np.ndarray
    bob_axes: np.ndarray
    bob_results: np.ndarray
    sifted_indices: np.ndarray
    test_indices: np.ndarray
    key: np.ndarray
    eve_present: bool
    test_errors: int

    @property
    def detected(self):
        return self.test_errors > 0

    @property
    def sift_fraction(self):
        return self.sifted_indices.size / self.n_raw

    @property
    def alice_key(self):
        keep = np.setdiff1d(self.sifted_indices, self.test_indices)
        return self.alice_bits[keep]


def _prepare(bits, axes):
    plus, minus = batch_eigenstates(_THETA[axes], 0.0)
    return np.where((bits == 1)[:, None], plus, minus)


def bb84_run(n_raw, m_test, eve, rng):
    """Run steps a-e of BB84 once.

    Raises :class:`ProtocolAbort` when fewer than ``m_test`` bits survive
    sifting (no rule exists for shrinking the test set).
    """
    if n_raw < 1 or m_test < 0:
        raise ValueError("n_raw must be positive and m_test non-negative")
    alice_rng, eve_rng, bob_rng = rng.spawn(3)
    # a: Alice picks random bits and random bases
    bits = alice_rng.integers(0, 2, size=n_raw).astype(np.uint8)
    a_axes = alice_rng.integers(0, 2, size=n_raw)
    amps = _prepare(bits, a_axes)
    if eve:
        e_axes = eve_rng.integers(0, 2, size=n_raw)
        _, amps = measure_batch(amps, _THETA[e_axes], 0.0, eve_rng)
    # b: Bob measures in random bases
    b_axes = bob_rng.integers(0, 2, size=n_raw)
    outcomes, _ = measure_batch(amps, _THETA[b_axes], 0.0, bob_rng)
    results = (outcomes == 1).astype(np.uint8)
    # c: public basis comparison
    sifted = np.flatnonzero(a_axes == b_axes)
    if sifted.size < m_test:
        raise ProtocolAbort(f"only {sifted.size} sifted bits, need {m_test} for testing")
    # d: Bob reveals a random test subset
    test = np.sort(bob_rng.choice(sifted, size=m_test, replace=False))
    errors = int(np.count_nonzero(bits[test] != results[test]))
    # e: the rest is the key
    keep = np.setdiff1d(sifted, test)
    return BB84Session(
        n_raw=n_raw,
        alice_bits=bits,
        alice_axes=a_axes,
        bob_axes=b_axes,
        bob_results=results,
        sifted_indices=sifted,
        test_indices=test,
        key=results[keep],
        eve_present=bool(eve),
        test_errors=errors,
    )


def detection_probability(m_test):
    """``P = 1 - (3/4)^M`` for intercept-resend with random bases."""
    return 1.0 - 0.75**m_test


def bb84_detection_count(m_test, sessions, seed, n_raw=None, eve=True):
    """Sessions (out of ``sessions``) in which the test subset showed an error.

    Every session runs on its own stream ``child_rng(seed, i)``.  ``n_raw``
    defaults to ``8 * m_test`` so that sifting essentially never falls short.
    """
    n_raw = 8 * max(m_test, 4) if n_raw is None else n_raw
    detected = 0
    for i in range(sessions):
        s = bb84_run(n_raw, m_test, eve, child_rng(seed, i))
        detected += s.detected
    return detected
