"""
Spin measurement and the Stern-Gerlach pointer
==============================================

A spin prepared along one axis and measured along another gives random
results with probability cos^2(Theta/2).  Coupling the spin to a pointer
shows where the randomness comes from: the pointer becomes entangled with
the spin, and how much we learn depends on how far apart the two pointer
packets end up.
"""

import numpy as np

from qisim.gates import X_AXIS, MeasurementAxis, axis_change_unitary, Z_AXIS
from qisim.measurement import (
    PointerModel,
    conditional_state,
    measure_axis,
    outcome_probabilities,
    polarization,
    unconditional_rho,
)
from qisim.rng import make_rng
from qisim.states import PureState

rng = make_rng(1)
up = PureState.from_labels("u")

# encode on z, decode on a tilted axis
for theta in (0.0, np.pi / 3, np.pi / 2, np.pi):
    p_plus, _ = outcome_probabilities(up, 0, MeasurementAxis(theta))
    print(f"theta = {theta:5.3f}   P(+1) = {p_plus:.4f}   cos^2(theta/2) = {np.cos(theta / 2) ** 2:.4f}")

# rotating the state onto x makes the x measurement certain
u = axis_change_unitary(Z_AXIS, X_AXIS)
right = u.apply(up)
print("after U(z->x), P(+1 along x) =", outcome_probabilities(right, 0, X_AXIS)[0])

# repeated measurement is QND: the second result copies the first
first = measure_axis(up, 0, X_AXIS, rng)
second = measure_axis(first.post_state, 0, X_AXIS, rng)
print("x then x again:", first.value, second.value)

# weak vs strong pointer
alpha = beta = np.sqrt(0.5)
for d in (0.1, 1.0, 8.0):
    pm = PointerModel(d, 1.0)
    rho = unconditional_rho(alpha, beta, pm.overlap())
    sz = polarization(conditional_state(alpha, beta, pm, d))[2]
    print(f"d/sigma = {d:4.1f}   overlap = {pm.overlap():.3e}   "
          f"|rho_ud| = {abs(rho.mat[0, 1]):.3e}   <sz | R=+d> = {sz:+.4f}")
