"""LC quantization, one-port admittance and normal-mode extraction.

Units: hbar = 1.  Admittances follow the electrical engineer's ``j = -i``
internally.  Every element is reactive, so ``Y = j B(omega)`` with a real
susceptance ``B``; :func:`admittance` returns the numpy complex value
``-1j * B``.  ``B`` increases with frequency between poles (Foster's
theorem), so modes are the upward zero crossings of ``B`` and the
downward crossings are poles of the series branches.

The mode impedance follows from the slope at the zero,
``Z_j = 2 / (omega_j B'(omega_j))``; for a plain parallel LC this gives
exactly ``sqrt(L/C)``.
"""

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np
from scipy.optimize import bisect

from ..errors import RegimeError


@dataclass(frozen=True)
class LCParams:
    L: float
    C: float

    def __post_init__(self):
        if self.L <= 0 or self.C <= 0:
            raise ValueError("L and C must be positive")


def lc_quantize(p):
    """``(Omega, Z, Phi_ZPF, Q_ZPF)`` for a parallel LC oscillator."""
    omega = 1.0 / np.sqrt(p.L * p.C)
    z = np.sqrt(p.L / p.C)
    return omega, z, np.sqrt(z / 2.0), np.sqrt(1.0 / (2.0 * z))


@dataclass(frozen=True)
class OnePortNetwork:
    """Shunt capacitor ``C0``, optional shunt inductor ``L0`` and parallel series-LC branches.

    ``L0 = inf`` means no shunt inductor.
    """

    C0: float = 0.0
    branches: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)
    L0: float = np.inf

    def __post_init__(self):
        if self.C0 < 0 or self.L0 <= 0:
            raise ValueError("C0 must be non-negative and L0 positive")
        br = tuple((float(l), float(c)) for l, c in self.branches)
        if any(l <= 0 or c <= 0 for l, c in br):
            raise ValueError("branch elements must be positive")
        object.__setattr__(self, "branches", br)

    def poles(self):
        return sorted(1.0 / np.sqrt(l * c) for l, c in self.branches)

    @classmethod
    def parallel_lc(cls, L, C):
        return cls(C0=C, L0=L)


def susceptance(net, omega):
    """``B(omega)`` with ``Y = j B``."""
    omega = np.asarray(omega, dtype=float)
    b = omega * net.C0
    with np.errstate(divide="ignore"):
        if np.isfinite(net.L0):
            b = b - 1.0 / (omega * net.L0)
        for l, c in net.branches:
            b = b - 1.0 / (omega * l - 1.0 / (omega * c))
    return b


def admittance(net, omega, pole_tol=1e-9):
    """Input admittance as a numpy complex number (``j = -i``)."""
    if np.any(np.asarray(omega) <= 0):
        raise ValueError("frequency must be positive")
    for w in net.poles():
        if np.any(np.abs(np.asarray(omega) - w) <= pole_tol * w):
            raise RegimeError(f"frequency within {pole_tol:g} of a branch pole at {w:g}")
    return -1j * susceptance(net, omega)


def _slope(net, omega, rel_step=1e-6):
    h = rel_step * omega
    return (susceptance(net, omega + h) - susceptance(net, omega - h)) / (2 * h)


def find_modes(net, omega_min=None, omega_max=None, n_scan=20001, rtol=1e-10):
    """Normal modes ``[(omega_j, Z_j), ...]`` from upward zero crossings of ``B``."""
    scale = []
    if np.isfinite(net.L0) and net.C0 > 0:
        scale.append(1.0 / np.sqrt(net.L0 * net.C0))
    scale += net.poles()
    if not scale:
        raise RegimeError("network has no resonant structure")
    lo = omega_min if omega_min is not None else min(scale) / 20.0
    hi = omega_max if omega_max is not None else max(scale) * 20.0
    grid = np.geomspace(lo, hi, n_scan)
    b = susceptance(net, grid)
    modes = []
    for i in np.flatnonzero((b[:-1] < 0) & (b[1:] >= 0)):
        w = bisect(lambda x: float(susceptance(net, x)), grid[i], grid[i + 1], xtol=1e-300, rtol=rtol)
        slope = _slope(net, w)
        modes.append((w, 2.0 / (w * slope)))
    if not modes:
        raise RegimeError(f"no admittance zero in [{lo:g}, {hi:g}]")
    return modes


def oscillator_wavefunctions(phi_zpf, grid):
    """Ground and first excited Fock wavefunctions sampled on ``grid``."""
    grid = np.asarray(grid, dtype=float)
    if grid.min() > -8 * phi_zpf or grid.max() < 8 * phi_zpf:
        raise ValueError("grid must span at least +-8 Phi_ZPF")
    f = np.sqrt(2 * np.pi * phi_zpf**2)
    gauss = np.exp(-(grid**2) / (4 * phi_zpf**2)) / np.sqrt(f)
    return gauss, grid / phi_zpf * gauss


def ladder(n_max):
    """Annihilation operator on Fock states ``0..n_max``."""
    return np.diag(np.sqrt(np.arange(1, n_max + 1, dtype=float)), 1)


def flux_operator(phi_zpf, n_max):
    """``Phi = Phi_ZPF (a + a^dag)`` in a truncated Fock space."""
    a = ladder(n_max)
    return phi_zpf * (a + a.T)
