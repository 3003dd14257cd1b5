"""Jaynes-Cummings spectrum and the dispersive shift.

``H = w_r a^dag a + (w_q/2) sigma^z + g (a sigma^+ + a^dag sigma^-)`` on
cavity (x) qubit, with ``|e>`` as qubit index 0.

Sign convention for the detuning: ``Delta = w_r - w_q``, which makes the
dispersive formula ``chi = -g^2/Delta`` agree in sign with
``chi = [(E_1e - E_0e) - (E_1g - E_0g)] / 2`` from exact diagonalization.
(With ``w_q > w_r`` the cavity is pulled up when the qubit is excited.)
"""

import numpy as np

from ..errors import ConvergenceError, RegimeError
from ..linalg import eigendecompose_hermitian
from ..states import HermitianOperator
from .lc import ladder

SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=float)  # |g><e|
SIGMA_Z = np.diag([1.0, -1.0])
MAX_DISPERSIVE_RATIO = 0.1


def default_n_max(omega_r, omega_q, g):
    return int(np.ceil(5 + 10 * (g / abs(omega_q - omega_r)) ** 2)) + 5


def jc_hamiltonian(omega_r, omega_q, g, n_max):
    a = ladder(n_max)
    eye_c = np.eye(n_max + 1)
    eye_q = np.eye(2)
    sm = SIGMA_MINUS
    h = (
        omega_r * np.kron(a.T @ a, eye_q)
        + 0.5 * omega_q * np.kron(eye_c, SIGMA_Z)
        + g * (np.kron(a, sm.T) + np.kron(a.T, sm))
    )
    return HermitianOperator(h, (n_max + 1, 2))


def jc_spectrum(omega_r, omega_q, g, n_max):
    return eigendecompose_hermitian(jc_hamiltonian(omega_r, omega_q, g, n_max).mat)[0]


def jc_block_energies(omega_r, omega_q, g, n):
    """Closed form for the n-excitation doublet: ``w_r (n - 1/2) +- sqrt(D^2/4 + g^2 n)``."""
    d = omega_q - omega_r
    root = np.sqrt(d**2 / 4 + g**2 * n)
    c = omega_r * (n - 0.5)
    return c - root, c + root


def labelled_energies(omega_r, omega_q, g, n_max, labels, min_overlap=0.8):
    """Energies of eigenstates adiabatically connected to bare ``|n, q>``.

    ``labels`` is a list of ``(n, 'g'|'e')``.  Each is matched to the
    eigenvector with the largest overlap with the bare state.
    """
    evals, evecs = eigendecompose_hermitian(jc_hamiltonian(omega_r, omega_q, g, n_max).mat)
    out = {}
    for n, q in labels:
        idx = 2 * n + (0 if q == "e" else 1)
        weights = np.abs(evecs[idx, :]) ** 2
        k = int(np.argmax(weights))
        if weights[k] < min_overlap:
            raise RegimeError(f"state |{n},{q}> has no dominant eigenvector ({weights[k]:.2f})")
        out[(n, q)] = float(evals[k])
    return out


def _check_dispersive(omega_r, omega_q, g):
    delta = omega_r - omega_q
    if delta == 0 or abs(g / delta) > MAX_DISPERSIVE_RATIO + 1e-12:
        raise RegimeError(f"g/|Delta| = {abs(g / delta) if delta else np.inf:.3g} exceeds 0.1")
    return delta


def dispersive_chi(omega_r, omega_q, g):
    """``-g^2 / Delta`` with ``Delta = w_r - w_q``."""
    delta = _check_dispersive(omega_r, omega_q, g)
    return -(g**2) / delta


def dispersive_chi_numeric(omega_r, omega_q, g, n_max=None, check=True):
    """Half the difference of cavity spacings with the qubit in e and g."""
    _check_dispersive(omega_r, omega_q, g)
    n_max = default_n_max(omega_r, omega_q, g) if n_max is None else n_max

    def chi_at(nm):
        e = labelled_energies(omega_r, omega_q, g, nm, [(0, "g"), (1, "g"), (0, "e"), (1, "e")])
        return 0.5 * ((e[(1, "e")] - e[(0, "e")]) - (e[(1, "g")] - e[(0, "g")]))

    chi = chi_at(n_max)
    if check:
        chi2 = chi_at(2 * n_max)
        if abs(chi - chi2) > 1e-6 * max(abs(chi), 1e-300):
            raise ConvergenceError("JC truncation not converged")
    return chi


# ---------------------------------------------------------------------------
# two-level reduction and the 3-level check

TWO_LEVEL_SUBSTITUTIONS = {
    "b^dag b": "(1 + sigma^z)/2",
    "b": "sigma^-",
    "b^dag": "sigma^+",
}


def two_level_reduction(omega_tilde, alpha, g=None):
    """Substitution table plus the truncated qubit operators.

    The projection of ``b`` onto the lowest two oscillator levels is exactly
    ``sigma^-`` and of ``b^dag b`` is ``(1 + sigma^z)/2``; the anharmonic
    term ``-(alpha/2) b^dag b^dag b b`` vanishes there.  Valid when
    ``g << alpha``.
    """
    b = ladder(1)  # 2 levels, basis (|0>, |1>)
    # reorder to (|e>, |g>) = (|1>, |0>)
    perm = np.array([[0, 1], [1, 0]])
    b2 = perm @ b @ perm
    ops = {
        "b": b2,
        "b^dag b": perm @ (b.T @ b) @ perm,
        "qubit_hamiltonian": omega_tilde * perm @ (b.T @ b) @ perm,
    }
    valid = None if g is None else bool(g < 0.1 * alpha)
    return {"substitutions": dict(TWO_LEVEL_SUBSTITUTIONS), "operators": ops, "valid": valid}


def three_level_chi(omega_r, omega_q, alpha, g, n_max=None):
    """Dispersive shift with the transmon kept to three levels.

    ``H = w_r a^dag a + w_q b^dag b - (alpha/2) b^dag b^dag b b + g (a^dag b + a b^dag)``.
    """
    n_max = default_n_max(omega_r, omega_q, g) if n_max is None else n_max
    a = ladder(n_max)
    b = ladder(2)
    nb = b.T @ b
    ec, eq = np.eye(n_max + 1), np.eye(3)
    h = (
        omega_r * np.kron(a.T @ a, eq)
        + omega_q * np.kron(ec, nb)
        - 0.5 * alpha * np.kron(ec, b.T @ b.T @ b @ b)
        + g * (np.kron(a.T, b) + np.kron(a, b.T))
    )
    evals, evecs = eigendecompose_hermitian(h)

    def level(n, q):
        w = np.abs(evecs[3 * n + q, :]) ** 2
        k = int(np.argmax(w))
        if w[k] < 0.8:
            raise RegimeError("ambiguous dressed-state labelling")
        return evals[k]

    return 0.5 * ((level(1, 1) - level(0, 1)) - (level(1, 0) - level(0, 0)))


def three_level_chi_formula(omega_r, omega_q, alpha, g):
    """``g^2/D - g^2/(D - alpha)`` with ``D = w_q - w_r``."""
    d = omega_q - omega_r
    return g**2 / d - g**2 / (d - alpha)
