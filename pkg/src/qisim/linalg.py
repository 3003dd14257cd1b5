"""Dense Hermitian eigensolver.

Small matrices (dimension <= ``JACOBI_MAX_DIM``) are diagonalized with a
cyclic complex Jacobi sweep, which is deterministic and needs nothing beyond
elementwise arithmetic.  Larger matrices go through LAPACK's Householder
tridiagonalization (``numpy.linalg.eigh``).  Both routes finish with the same
canonicalization step so eigenvectors are reproducible:

* inside every degenerate cluster the basis is rebuilt by Gram-Schmidt on the
  standard basis vectors taken in index order;
* every eigenvector is given a real, positive leading component.
"""

import numpy as np

from .constants import DEGENERACY_TOL, JACOBI_MAX_DIM, SPECTRAL_TOL, STATE_TOL
from .errors import DimensionError, NotHermitianError


def check_hermitian(mat, tol=STATE_TOL):
    """Return ``mat`` as a complex array, raising if it is not Hermitian."""
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {mat.shape}")
    scale = max(1.0, float(np.max(np.abs(mat))) if mat.size else 1.0)
    if np.max(np.abs(mat - mat.conj().T), initial=0.0) > tol * scale:
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    return mat


def _off_norm(a):
    return np.linalg.norm(a - np.diag(np.diag(a)))


def jacobi_eigh(mat, tol=1e-14, max_sweeps=100):
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Each (p, q) rotation first removes the phase of ``a[p, q]`` and then
    applies the classical real Jacobi rotation.  Returns unsorted eigenvalues
    and the accumulated unitary whose columns are eigenvectors.
    """
    a = np.array(mat, dtype=complex)
    if not np.any(a.imag):
        a = a.real.copy()
    n = a.shape[0]
    v = np.eye(n, dtype=a.dtype)
    scale = np.linalg.norm(a)
    if n < 2 or scale == 0.0:
        return np.real(np.diag(a)).copy(), v.astype(complex)
    for _ in range(max_sweeps):
        if _off_norm(a) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300 or mag < 1e-18 * scale:
                    continue
                phase = apq / mag
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # columns p, q of U: (c, -s e^{-i phi}), (s, c e^{-i phi}) on rows p, q
                cp = np.conj(phase)
                u_pp, u_qp, u_pq, u_qq = c, -s * cp, s, c * cp
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = col_p * u_pp + col_q * u_qp
                a[:, q] = col_p * u_pq + col_q * u_qq
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = np.conj(u_pp) * row_p + np.conj(u_qp) * row_q
                a[q, :] = np.conj(u_pq) * row_p + np.conj(u_qq) * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp * u_pp + vq * u_qp
                v[:, q] = vp * u_pq + vq * u_qq
    return np.real(np.diag(a)).copy(), v.astype(complex)


def _canonicalize(evals, evecs):
    n = len(evals)
    radius = max(1.0, float(np.max(np.abs(evals)))) if n else 1.0
    out = evecs.copy()
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and evals[stop] - evals[stop - 1] <= DEGENERACY_TOL * radius:
            stop += 1
        if stop - start > 1:
            block = evecs[:, start:stop]
            proj = block @ block.conj().T
            basis = []
            for i in range(n):
                w = proj[:, i].copy()
                for b in basis:
                    w -= b * np.vdot(b, w)
                norm = np.linalg.norm(w)
                if norm > 1e-6:
                    basis.append(w / norm)
                    if len(basis) == stop - start:
                        break
            out[:, start:stop] = np.column_stack(basis)
        start = stop
    for k in range(n):
        col = out[:, k]
        lead = int(np.argmax(np.abs(col) > 1e-8 * np.max(np.abs(col))))
        out[:, k] = col * (abs(col[lead]) / col[lead])
    return out


def eigendecompose_hermitian(mat):
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns).

    Raises :class:`NotHermitianError` for non-Hermitian input.
    """
    mat = check_hermitian(mat)
    n = mat.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0), dtype=complex)
    if n <= JACOBI_MAX_DIM:
        evals, evecs = jacobi_eigh(mat)
    else:
        evals, evecs = np.linalg.eigh(mat)
    order = np.argsort(evals, kind="stable")
    evals = evals[order]
    evecs = evecs[:, order]
    return evals, _canonicalize(evals, evecs)


def eigvals_hermitian(mat):
    """Ascending eigenvalues only."""
    return eigendecompose_hermitian(mat)[0]


def max_residual(mat, evals, evecs):
    """Largest ``||H v - lambda v||`` relative to ``||H||`` (for checks)."""
    mat = np.asarray(mat, dtype=complex)
    res = mat @ evecs - evecs * evals[np.newaxis, :]
    norm = max(np.linalg.norm(mat, 2), 1e-300)
    return float(np.max(np.linalg.norm(res, axis=0)) / norm)


__all__ = [
    "check_hermitian",
    "eigendecompose_hermitian",
    "eigvals_hermitian",
    "jacobi_eigh",
    "max_residual",
    "SPECTRAL_TOL",
]
