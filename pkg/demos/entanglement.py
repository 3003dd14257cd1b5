"""
Dense coding, teleportation and the CHSH inequality
===================================================

All three use the singlet |B0>.  A local Pauli on one half moves it to any
of the other Bell states, so one qubit carries two bits; a Bell
measurement plus two classical bits moves an unknown state across; and the
singlet's correlations reach |S| = 2 sqrt2, beyond any local model.
"""

import numpy as np

from qisim.gates import bell_measurement_map, bell_state
from qisim.protocols.bell import (
    chsh_expectation,
    chsh_sample,
    densecode_send,
    teleport,
    teleport_branches,
)
from qisim.rng import make_rng
from qisim.states import PureState, entanglement_entropy, kron, random_pure_state

rng = make_rng(11)

for k in range(4):
    out = bell_measurement_map(bell_state(k)).amps
    idx = int(np.argmax(np.abs(out)))
    print(f"H1 CNOT12 |B{k}> = {out[idx].real:+.0f} x basis state {idx}",
          f"  S_E = {entanglement_entropy(bell_state(k), (0,)):.3f} bit")

print("dense coding:", {m: densecode_send(m) for m in ("00", "01", "10", "11")})

psi = PureState.from_amplitudes([0.8j, 0.6])
print("teleport branches (rows B0..B3, columns e, g):")
print(np.round(teleport_branches(psi), 3))
for _ in range(4):
    out, k, label = teleport(psi, rng)
    print(f"  outcome B{k}, correction {label:>3}, fidelity {out.fidelity(psi):.12f}")

print("S(B0) exact  =", chsh_expectation(bell_state(0)))
est, se = chsh_sample(bell_state(0), 100_000, rng)
print(f"S(B0) sample = {est:.4f} +- {se:.4f}")
worst = max(abs(chsh_expectation(kron(random_pure_state((2,), rng), random_pure_state((2,), rng))))
            for _ in range(500))
print(f"largest |S| over 500 product states = {worst:.4f}")
