import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qisim.errors import CapacityError, DimensionError, ProtocolAbort
from qisim.gates import I_Y, PAULI_X, PAULI_Z, bell_state, spin_eigenstates
from qisim.protocols.bell import (
    DENSE_CODE_BELL,
    DENSE_CODE_OPS,
    MESSAGES,
    TELEPORT_CORRECTIONS,
    chsh_correlators,
    chsh_expectation,
    chsh_sample,
    densecode_encode,
    densecode_send,
    identify_bell,
    teleport,
    teleport_branches,
)
from qisim.protocols.clock import clock_overlaps_closed_form, clock_phase_demo
from qisim.protocols.money import (
    QuantumBill,
    counterfeit_pass_count,
    counterfeit_pass_probability,
    genuine_pass_count,
    money_counterfeit,
    money_issue,
    money_verify,
    money_verify_detail,
)
from qisim.protocols.qkd import (
    bb84_detection_count,
    bb84_run,
    detection_probability,
    otp_decrypt,
    otp_encrypt,
)
from qisim.rng import child_rng
from qisim.states import PureState, kron, random_pure_state


def within(k, n, p, sigmas=4):
    return abs(k / n - p) <= sigmas * np.sqrt(p * (1 - p) / n)


# --- quantum money


def test_money_issue_and_verify(rng):
    bill = money_issue(12, rng, serial=7)
    assert bill.classical_serial == 7
    assert money_verify(bill)
    ok, post = money_verify_detail(bill)
    assert ok and money_verify(post)


def test_money_secret_mismatch_rejected(rng):
    bill = money_issue(3, rng)
    with pytest.raises(ValueError):
        money_verify(bill, secret=bill.secret[:2])


def test_counterfeit_probability_closed_form():
    assert counterfeit_pass_probability(8) == pytest.approx(0.100112915039, abs=1e-12)
    assert counterfeit_pass_probability(1) == 0.75


def test_object_path_agrees_with_vectorized_path():
    # the per-bill object path and the batched path estimate the same rate
    trials, n = 3000, 2
    passed = 0
    for i in range(trials):
        r = child_rng(99, i)
        bill = money_issue(n, r)
        forged = money_counterfeit(bill, "paper_axes", r)
        passed += money_verify(forged, rng=r)
    assert within(passed, trials, 0.75**n)
    fast = counterfeit_pass_count(n, 50_000, 99)
    assert within(fast, 50_000, 0.75**n)


def test_rotated_forger_does_no_better():
    for angle in (0.3, np.pi / 4):
        k = counterfeit_pass_count(1, 40_000, 5, ("rotated_axes", angle))
        assert within(k, 40_000, 0.75)


def test_genuine_always_pass():
    assert genuine_pass_count(8, 20_000, 3) == 20_000


def test_unknown_strategy(rng):
    bill = money_issue(1, rng)
    with pytest.raises(ValueError):
        money_counterfeit(bill, "clone", rng)


# --- one-time pad and BB84


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=64), st.integers(0, 2**31))
def test_otp_roundtrip(msg, seed):
    pad = np.random.default_rng(seed).integers(0, 2, size=len(msg) + 3)
    c = otp_encrypt(msg, pad)
    np.testing.assert_array_equal(otp_decrypt(c, pad), msg)


def test_otp_short_pad():
    with pytest.raises(ValueError):
        otp_encrypt([1, 0, 1], [1])


def test_bb84_without_eve(rng):
    s = bb84_run(4000, 50, False, rng)
    assert s.test_errors == 0 and not s.detected
    np.testing.assert_array_equal(s.key, s.alice_key)
    assert within(s.sifted_indices.size, 4000, 0.5)
    assert s.key.size == s.sifted_indices.size - 50


def test_bb84_eve_error_rate_per_tested_bit(rng):
    s = bb84_run(40_000, 10_000, True, rng)
    assert within(s.test_errors, 10_000, 0.25)


def test_bb84_abort_when_sifting_falls_short(rng):
    with pytest.raises(ProtocolAbort):
        bb84_run(10, 20, False, rng)


def test_bb84_detection_batch():
    m = 3
    k = bb84_detection_count(m, 4000, 11)
    assert within(k, 4000, detection_probability(m))


def test_bb84_deterministic():
    a = bb84_run(500, 10, True, child_rng(1, 2))
    b = bb84_run(500, 10, True, child_rng(1, 2))
    np.testing.assert_array_equal(a.bob_results, b.bob_results)


# --- dense coding


def test_local_ops_on_singlet():
    b0 = bell_state(0)
    np.testing.assert_allclose(PAULI_Z.apply(b0, 0).amps, bell_state(1).amps, atol=1e-12)
    np.testing.assert_allclose(PAULI_X.apply(b0, 0).amps, bell_state(2).amps, atol=1e-12)
    np.testing.assert_allclose(I_Y.apply(b0, 0).amps, bell_state(3).amps, atol=1e-12)


@pytest.mark.parametrize("msg", MESSAGES)
def test_dense_coding_roundtrip(msg):
    assert densecode_send(msg) == msg
    k, sign = identify_bell(densecode_encode(msg))
    assert k == DENSE_CODE_BELL[msg] and sign == 1


def test_dense_coding_table():
    assert {m: op.label for m, op in DENSE_CODE_OPS.items()} == {
        "00": "X",
        "01": "I",
        "10": "iY",
        "11": "Z",
    }
    with pytest.raises(ValueError):
        densecode_encode("2")


def test_identify_rejects_non_bell():
    with pytest.raises(ValueError):
        identify_bell(PureState.from_amplitudes([1, 1, 0, 0]))


# --- teleportation


def test_teleport_branch_decomposition():
    a, b = 0.6, 0.8j
    unknown = PureState.from_amplitudes([b, a])  # alpha|g> + beta|e>, index 0 = e
    c = teleport_branches(unknown)
    # printed branches (coefficient 1/2), vectors written as (e, g)
    printed = 0.5 * np.array([[-a, -b], [-a, b], [-b, -a], [b, -a]])
    np.testing.assert_allclose(c, printed, atol=1e-14)


def test_correction_table():
    assert {k: op.label for k, op in TELEPORT_CORRECTIONS.items()} == {
        0: "X",
        1: "-iY",
        2: "I",
        3: "Z",
    }


def test_teleport_fidelity_random_states(rng):
    for _ in range(50):
        psi = random_pure_state((2,), rng)
        out, k, label = teleport(psi, rng)
        assert out.fidelity(psi) == pytest.approx(1.0, abs=1e-12)
        assert label == TELEPORT_CORRECTIONS[k].label


def test_teleport_rejects_two_qubits(rng):
    with pytest.raises(DimensionError):
        teleport(bell_state(0), rng)


# --- CHSH


def test_chsh_singlet():
    assert chsh_expectation(bell_state(0)) == pytest.approx(-2 * np.sqrt(2), abs=1e-12)
    corr = chsh_correlators(bell_state(0))
    assert corr[("X", "X'")] == pytest.approx(-1 / np.sqrt(2))


def test_chsh_all_bell_states_saturate():
    for k in range(4):
        assert abs(chsh_expectation(bell_state(k))) <= 2 * np.sqrt(2) + 1e-12


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**31))
def test_product_states_obey_bound(seed):
    r = np.random.default_rng(seed)
    psi = kron(random_pure_state((2,), r), random_pure_state((2,), r))
    assert abs(chsh_expectation(psi)) <= 2 + 1e-12


def test_chsh_sampling(rng):
    est, se = chsh_sample(bell_state(0), 40_000, rng)
    assert abs(est + 2 * np.sqrt(2)) < 4 * se
    with pytest.raises(ValueError):
        chsh_sample(bell_state(0), 0, rng)


# --- clock


def test_clock_overlaps_match_closed_form():
    for n, w, t in [(1, 1.0, 0.3), (4, 1.0, np.pi / 4), (6, 2.0, 0.1)]:
        prod, ghz = clock_phase_demo(n, w, t)
        cp, cg = clock_overlaps_closed_form(n, w, t)
        assert prod == pytest.approx(cp, abs=1e-12)
        assert ghz == pytest.approx(cg, abs=1e-12)


def test_clock_ghz_decays_n_times_faster():
    n, w = 4, 1.0
    _, ghz = clock_phase_demo(n, w, np.pi / n)
    prod, _ = clock_phase_demo(n, w, np.pi / n)
    assert abs(ghz) < 1e-12 < abs(prod)


def test_clock_capacity():
    with pytest.raises(CapacityError):
        clock_phase_demo(13, 1.0, 0.1)


# --- further worked values


def test_money_axis_marginal(rng):
    bill = money_issue(10_000, rng)
    z = sum(ax == "Z" for ax, _ in bill.secret)
    assert within(z, 10_000, 0.5, sigmas=3)
    assert len(money_issue(1, rng).secret) == 1


def _bank_state(axis, sign):
    plus, minus = spin_eigenstates(0.0 if axis == "Z" else np.pi / 2, 0.0)
    return plus if sign > 0 else minus


def test_verify_flipped_and_wrong_axis(rng):
    bill = money_issue(4, rng)
    ax, sg = bill.secret[0]
    flipped = QuantumBill(bill.classical_serial, bill.secret, (_bank_state(ax, -sg),) + bill.qubits[1:])
    assert not money_verify(flipped)
    other = "X" if ax == "Z" else "Z"
    n, passed = 4000, 0
    for _ in range(n):
        wrong = _bank_state(other, 1)
        forged = QuantumBill(bill.classical_serial, bill.secret, (wrong,) + bill.qubits[1:])
        passed += money_verify(forged, rng=rng)
    assert within(passed, n, 0.5, sigmas=3)


def test_verification_leaves_genuine_bill_unchanged(rng):
    bill = money_issue(6, rng)
    ok, post = money_verify_detail(bill)
    assert ok
    for a, b in zip(bill.qubits, post.qubits):
        assert abs(a.overlap(b)) == pytest.approx(1.0)
    assert money_verify(post)


def test_single_qubit_forgery_rate():
    k = counterfeit_pass_count(1, 20_000, seed=3)
    assert within(k, 20_000, 0.75, sigmas=3)


def test_otp_zero_pad_and_uniform_cipher():
    msg = np.array([1, 0, 1, 1, 0, 0, 1, 0])
    np.testing.assert_array_equal(otp_encrypt(msg, np.zeros(8, dtype=int)), msg)
    pads = ((np.arange(256)[:, None] >> np.arange(8)) & 1).astype(int)
    ciphers = {tuple(otp_encrypt(msg, p)) for p in pads}
    assert len(ciphers) == 256


def test_teleport_outcomes_uniform(rng):
    n = 10_000
    psi = random_pure_state((2,), rng)
    counts = np.zeros(4)
    for _ in range(n):
        _, k, _ = teleport(psi, rng)
        counts[k] += 1
    for c in counts:
        assert within(c, n, 0.25, sigmas=3)
    np.testing.assert_allclose(np.sum(np.abs(teleport_branches(psi)) ** 2, axis=1), 0.25)


def test_teleport_excited_input_branch_two():
    e = PureState.from_labels("e")
    branch = teleport_branches(e)[2]
    assert abs(np.vdot(e.amps, branch)) == pytest.approx(0.5)
    assert TELEPORT_CORRECTIONS[2].label == "I"


def test_chsh_bounds_random_states(rng):
    worst_sep = 0.0
    worst_any = 0.0
    for _ in range(1000):
        a, b = random_pure_state((2,), rng), random_pure_state((2,), rng)
        worst_sep = max(worst_sep, abs(chsh_expectation(kron(a, b))))
        worst_any = max(worst_any, abs(chsh_expectation(random_pure_state((2, 2), rng))))
    assert worst_sep <= 2 + 1e-12
    assert worst_any <= 2 * np.sqrt(2) + 1e-9


def test_chsh_sample_product_and_zero_trials(rng):
    uu = PureState.from_labels("uu")
    exact = chsh_expectation(uu)
    est, se = chsh_sample(uu, 100_000, rng)
    assert abs(est - exact) <= 3 * se
    with pytest.raises(ValueError):
        chsh_sample(uu, 0, rng)


def test_clock_single_qubit_and_first_zero():
    prod, ghz = clock_phase_demo(1, 1.3, 0.7)
    assert prod == pytest.approx(ghz)
    n, w = 4, 1.0
    _, ghz = clock_phase_demo(n, w, np.pi / (n * w))
    assert abs(ghz) < 1e-12
    _, ghz = clock_phase_demo(n, w, 2 * np.pi / (n * w))
    assert ghz == pytest.approx(1.0)
