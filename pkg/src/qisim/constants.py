"""Numerical tolerances and capacity limits shared by every module.

Property tests import these names instead of hard-coding literals.
"""

#: normalization / Hermiticity / trace checks on states and operators
STATE_TOL = 1e-10
#: eigen-residual scale (relative to the operator norm)
SPECTRAL_TOL = 1e-9
#: most negative eigenvalue still accepted in a density matrix
PSD_TOL = 1e-9
#: probability vectors must sum to one within this
PROB_TOL = 1e-9
#: imaginary residue tolerated (and discarded) in real-valued expectations
IMAG_TOL = 1e-10

#: largest Hilbert-space dimension ``kron`` will build
MAX_DIM = 2**14
#: largest register accepted by the dense quantum Fourier transform
MAX_QFT_QUBITS = 10
#: largest register for the entangled-clock demonstration
MAX_CLOCK_QUBITS = 12

#: above this dimension the Jacobi eigensolver hands off to LAPACK
JACOBI_MAX_DIM = 64
#: eigenvalues closer than this (relative to the spectral radius) form a cluster
DEGENERACY_TOL = 1e-8
