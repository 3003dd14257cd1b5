"""
From LC circuits to a transmon in a cavity
==========================================

An LC circuit is a harmonic oscillator.  Adding a Josephson junction makes
it anharmonic; the exact transmon levels from the charge basis are compared
with the quartic estimate.  Coupled to a cavity, the qubit shifts the
cavity frequency by chi = -g^2/Delta, and the black-box Kerr expansion
gives self- and cross-Kerr terms for several modes at once.
"""

import numpy as np

from qisim.cqed.jc import dispersive_chi, dispersive_chi_numeric
from qisim.cqed.kerr import ModeSpec, kerr_expansion, quartic_oracle
from qisim.cqed.lc import LCParams, OnePortNetwork, find_modes, lc_quantize
from qisim.cqed.transmon import (
    TransmonParams,
    charge_dispersion,
    transition_energies,
    transmon_perturbative,
)

omega, z, phi, q = lc_quantize(LCParams(L=2.0, C=0.5))
print(f"LC: Omega = {omega}, Z = {z}, Phi_zpf = {phi:.4f}, Q_zpf = {q:.4f}")
net = OnePortNetwork(1.0, ((1.0, 1.0), (0.1, 0.5)))
for w, zj in find_modes(net):
    print(f"  network mode  omega = {w:.6f}   Z = {zj:.6f}")

for ratio in (20.0, 50.0, 100.0):
    e01, e12 = transition_energies(TransmonParams(ratio, 1.0))
    _, o01, _, _ = transmon_perturbative(ratio, 1.0)
    print(f"E_J/E_C = {ratio:5.0f}: E01 = {e01:.4f} (quartic {o01:.4f}), "
          f"E12 - E01 = {e12 - e01:+.4f}, charge dispersion {charge_dispersion(ratio, 1.0):.2e}")

for g in (0.1, 0.05, 0.025):
    num, est = dispersive_chi_numeric(5.0, 6.0, g), dispersive_chi(5.0, 6.0, g)
    print(f"g = {g:5.3f}: chi exact {num:.6e}, -g^2/Delta {est:.6e}, rel. error {abs(num - est) / est:.2e}")

modes = [ModeSpec(1.0, 0.1), ModeSpec(1.37, 0.08)]
ana, fit = kerr_expansion(modes, 3.0), quartic_oracle(modes, 3.0)
print("Kerr chi (expansion):\n", np.array2string(ana.chi, precision=8))
print("Kerr chi (diagonalization):\n", np.array2string(fit.chi, precision=8))
