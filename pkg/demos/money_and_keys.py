"""
Quantum money and BB84 key distribution
=======================================

Both protocols rest on the same fact: measuring in the wrong basis
randomizes the state.  A forger who measures each qubit of a bill in a
guessed basis passes the bank's check with probability (3/4)^N, and an
eavesdropper on BB84 flips a tested bit with probability 1/4.
"""

from qisim.protocols.money import (
    counterfeit_pass_count,
    counterfeit_pass_probability,
    money_counterfeit,
    money_issue,
    money_verify,
)
from qisim.protocols.qkd import bb84_detection_count, bb84_run, detection_probability, otp_encrypt
from qisim.rng import make_rng

rng = make_rng(7)

bill = money_issue(8, rng, serial=1001)
print("genuine bill verifies:", money_verify(bill))
fake = money_counterfeit(bill, "paper_axes", rng)
print("one forged copy verifies:", money_verify(fake, rng=rng))

trials = 100_000
passed = counterfeit_pass_count(8, trials, seed=42)
print(f"forged pass rate {passed / trials:.5f}  vs (3/4)^8 = {counterfeit_pass_probability(8):.5f}")

# BB84 without and with an eavesdropper
clean = bb84_run(2000, 40, eve=False, rng=rng)
print(f"no Eve: sifted {clean.sift_fraction:.3f}, test errors {clean.test_errors}, key bits {clean.key.size}")
tapped = bb84_run(2000, 40, eve=True, rng=rng)
print(f"Eve:    test errors {tapped.test_errors} of 40 -> abort = {tapped.detected}")

sessions = 4000
hits = bb84_detection_count(20, sessions, seed=3)
print(f"detection over {sessions} sessions: {hits / sessions:.4f} vs {detection_probability(20):.5f}")

# use the key as a one-time pad
message = [1, 0, 1, 1, 0, 0, 1, 0]
cipher = otp_encrypt(message, clean.key)
print("message", message, "-> cipher", cipher.tolist())
