"""Transmon spectrum: exact charge-basis diagonalization and perturbative estimates.

``H = 4 E_C (n - n_g)^2 - E_J cos(phi)`` in the charge basis
``n = -n_cut..n_cut``; ``cos(phi)`` couples neighbouring charge states with
amplitude ``1/2``, so the matrix is real-symmetric tridiagonal.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from ..errors import ConvergenceError
from ..linalg import eigvals_hermitian


@dataclass(frozen=True)
class TransmonParams:
    E_J: float
    E_C: float
    n_g: float = 0.0
    n_cut: int = 0  # 0 selects the heuristic default

    def __post_init__(self):
        if self.E_J <= 0 or self.E_C <= 0:
            raise ValueError("E_J and E_C must be positive")
        if self.n_cut == 0:
            object.__setattr__(self, "n_cut", default_cutoff(self.E_J, self.E_C))
        if self.n_cut < 2:
            raise ValueError("n_cut must be at least 2")


def default_cutoff(e_j, e_c):
    return max(10, int(np.ceil(8 * (e_j / (8 * e_c)) ** 0.25)))


def charge_hamiltonian(p, n_cut=None):
    n_cut = p.n_cut if n_cut is None else n_cut
    n = np.arange(-n_cut, n_cut + 1, dtype=float)
    h = np.diag(4 * p.E_C * (n - p.n_g) ** 2)
    off = -0.5 * p.E_J * np.ones(2 * n_cut)
    return h + np.diag(off, 1) + np.diag(off, -1)


def _levels(p, n_cut, n_levels):
    return eigvals_hermitian(charge_hamiltonian(p, n_cut))[:n_levels]


def transmon_spectrum_exact(p, n_levels=3, check=True, tol=1e-9):
    """Lowest ``n_levels`` energies.

    With ``check`` the calculation is repeated at ``2 n_cut`` and
    :class:`ConvergenceError` is raised if E0..E2 move by more than
    ``tol * E_C``.
    """
    if n_levels > 2 * p.n_cut - 3:
        raise ValueError(f"n_levels={n_levels} too large for n_cut={p.n_cut}")
    e = _levels(p, p.n_cut, n_levels)
    if check:
        e2 = _levels(p, 2 * p.n_cut, n_levels)
        k = min(3, n_levels)
        drift = float(np.max(np.abs(e[:k] - e2[:k])))
        if drift > tol * p.E_C:
            raise ConvergenceError(f"charge cutoff {p.n_cut} not converged (drift {drift:.2e})")
    return e


def transition_energies(p):
    e = transmon_spectrum_exact(p, 3)
    return e[1] - e[0], e[2] - e[1]


def charge_dispersion(e_j, e_c, n_points=11):
    """Peak-to-peak variation of E01 as ``n_g`` sweeps over [0, 1/2]."""
    e01 = [
        transition_energies(TransmonParams(e_j, e_c, n_g))[0]
        for n_g in np.linspace(0.0, 0.5, n_points)
    ]
    return float(np.max(e01) - np.min(e01))


def transmon_perturbative(e_j, e_c):
    """``(Omega, Omega01, Omega12, alpha)`` from the quartic expansion."""
    if e_j / e_c < 20:
        warnings.warn("E_J/E_C < 20: perturbative transmon formulas are unreliable", stacklevel=2)
    omega = np.sqrt(8 * e_j * e_c)
    o01 = omega - e_c
    return omega, o01, o01 - e_c, e_c


def phi_zpf_transmon(e_j, e_c):
    """``(2 E_C / E_J)^(1/4)``; its square is ``Omega / (2 E_J)``."""
    return (2 * e_c / e_j) ** 0.25
