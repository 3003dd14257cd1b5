"""Black-box multimode Kerr expansion.

With ``phi = sum_j phi_j (a_j + a_j^dag)`` and ``V = -(E_J/24) phi^4``,
normal ordering and keeping only number-conserving terms gives

    V = sum_j dw_j n_j + 1/2 sum_jk chi_jk n_j n_k

    chi_jj = -E_J phi_j^4 / 2
    chi_jk = -E_J phi_j^2 phi_k^2                       (j != k)
    dw_j   = -(E_J/2) phi_j^2 (sum_k phi_k^2 - phi_j^2/2)

For one mode with ``E_J phi^4 / 2 = E_C`` this is ``chi = -E_C`` and
``dw = -E_C/2``: the 0-1 line drops by ``E_C`` and the 1-2 line by a
further ``E_C``, as for the transmon.

:func:`quartic_oracle` checks these numbers independently by exact
diagonalization of ``H0 + V`` in a truncated Fock space.  Sixth-order
terms of the cosine are not included in either.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import RegimeError
from ..linalg import eigendecompose_hermitian
from .lc import ladder

MAX_MODES = 3
MAX_PHI_ZPF = 0.5


@dataclass(frozen=True)
class ModeSpec:
    omega: float
    phi_zpf: float

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError("mode frequency must be positive")


@dataclass(frozen=True)
class KerrMatrix:
    delta_omega: np.ndarray
    chi: np.ndarray
    residual: float = 0.0

    def __post_init__(self):
        chi = np.asarray(self.chi, dtype=float)
        if not np.allclose(chi, chi.T, atol=1e-14, rtol=0):
            raise ValueError("chi must be symmetric")
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "delta_omega", np.asarray(self.delta_omega, dtype=float))


def _check_modes(modes):
    modes = list(modes)
    if not 1 <= len(modes) <= MAX_MODES:
        raise ValueError(f"between 1 and {MAX_MODES} modes supported")
    if any(abs(m.phi_zpf) > MAX_PHI_ZPF for m in modes):
        raise RegimeError(f"phi_zpf above {MAX_PHI_ZPF}: quartic truncation not valid")
    return modes


def kerr_expansion(modes, e_j):
    """Analytic normal-ordered RWA coefficients."""
    modes = _check_modes(modes)
    p2 = np.array([m.phi_zpf**2 for m in modes])
    chi = -e_j * np.outer(p2, p2)
    np.fill_diagonal(chi, -0.5 * e_j * p2**2)
    dw = -0.5 * e_j * p2 * (p2.sum() - 0.5 * p2)
    return KerrMatrix(dw, chi)


def _occupations(n_modes, max_total):
    return [
        occ
        for occ in itertools.product(range(max_total + 1), repeat=n_modes)
        if sum(occ) <= max_total
    ]


def _design_row(occ):
    occ = np.asarray(occ, dtype=float)
    m = occ.size
    quad = [occ[j] * occ[k] * (0.5 if j == k else 1.0) for j in range(m) for k in range(j, m)]
    return np.concatenate([[1.0], occ, quad])


def quartic_oracle(modes, e_j, n_max=8, fit_total=3, min_overlap=0.8):
    """Fit ``E(n) = E0 + sum (w_j + dw_j) n_j + 1/2 sum chi_jk n_j n_k`` to exact levels.

    Eigenstates are matched to bare occupation states by largest overlap;
    a match below ``min_overlap`` raises :class:`RegimeError`.  Levels with
    total occupation up to ``fit_total`` enter a least-squares fit.
    """
    modes = _check_modes(modes)
    if n_max < 6:
        raise ValueError("n_max must be at least 6")
    m = len(modes)
    d = n_max + 1
    pad = n_max + 5  # build phi in a larger space so phi^4 is exact below n_max
    a_big = ladder(pad - 1)
    eye_big = np.eye(pad)

    def embed_mode(op, j, eye):
        mats = [eye] * m
        mats[j] = op
        out = mats[0]
        for x in mats[1:]:
            out = np.kron(out, x)
        return out

    phi = sum(embed_mode(mo.phi_zpf * (a_big + a_big.T), j, eye_big) for j, mo in enumerate(modes))
    v_big = -(e_j / 24.0) * np.linalg.matrix_power(phi, 4)
    keep_1d = np.arange(d)
    keep = np.array(
        [np.ravel_multi_index(idx, (pad,) * m) for idx in itertools.product(keep_1d, repeat=m)]
    )
    v = v_big[np.ix_(keep, keep)]
    n_ops = [embed_mode(np.diag(np.arange(d, dtype=float)), j, np.eye(d)) for j in range(m)]
    h0 = sum(mo.omega * n for mo, n in zip(modes, n_ops))
    evals, evecs = eigendecompose_hermitian(h0 + v)

    rows, energies = [], []
    for occ in _occupations(m, fit_total):
        idx = int(np.ravel_multi_index(occ, (d,) * m))
        w = np.abs(evecs[idx, :]) ** 2
        k = int(np.argmax(w))
        if w[k] < min_overlap:
            raise RegimeError(f"occupation {occ} has no dominant eigenstate ({w[k]:.2f})")
        rows.append(_design_row(occ))
        energies.append(evals[k])
    design = np.array(rows)
    coef, *_ = np.linalg.lstsq(design, np.array(energies), rcond=None)
    resid = float(np.max(np.abs(design @ coef - energies)))
    lin = coef[1 : 1 + m] - np.array([mo.omega for mo in modes])
    chi = np.zeros((m, m))
    pos = 1 + m
    for j in range(m):
        for k in range(j, m):
            chi[j, k] = chi[k, j] = coef[pos]
            pos += 1
    return KerrMatrix(lin, chi, resid)
