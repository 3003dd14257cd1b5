import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qisim.errors import DimensionError, NotHermitianError
from qisim.linalg import (
    check_hermitian,
    eigendecompose_hermitian,
    eigvals_hermitian,
    jacobi_eigh,
    max_residual,
)


def random_hermitian(rng, d):
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return 0.5 * (a + a.conj().T)


@pytest.mark.parametrize("d", [1, 2, 3, 5, 8, 16, 33, 64, 65, 100])
def test_eigenvalues_match_lapack(rng, d):
    h = random_hermitian(rng, d)
    evals, evecs = eigendecompose_hermitian(h)
    np.testing.assert_allclose(evals, np.linalg.eigvalsh(h), atol=1e-10)
    assert max_residual(h, evals, evecs) < 1e-9
    np.testing.assert_allclose(evecs.conj().T @ evecs, np.eye(d), atol=1e-10)


def test_jacobi_raw_output_diagonalizes(rng):
    h = random_hermitian(rng, 12)
    w, v = jacobi_eigh(h)
    np.testing.assert_allclose(v.conj().T @ h @ v, np.diag(w), atol=1e-10)


def test_leading_component_real_positive(rng):
    _, evecs = eigendecompose_hermitian(random_hermitian(rng, 6))
    for col in evecs.T:
        lead = col[np.flatnonzero(np.abs(col) > 1e-12)[0]]
        assert abs(lead.imag) < 1e-12 and lead.real > 0


def test_degenerate_cluster_is_canonical():
    # identity: every route must return the standard basis
    evals, evecs = eigendecompose_hermitian(np.eye(4))
    np.testing.assert_allclose(evecs, np.eye(4), atol=1e-12)
    # a doubly degenerate pair rotated by a random unitary gives the same subspace basis
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
    h = q @ np.diag([1.0, 1.0, 2.0]) @ q.conj().T
    _, v1 = eigendecompose_hermitian(h)
    _, v2 = eigendecompose_hermitian(h.copy())
    np.testing.assert_allclose(v1, v2, atol=1e-12)


def test_pauli_eigenvalues():
    sy = np.array([[0, -1j], [1j, 0]])
    np.testing.assert_allclose(eigvals_hermitian(sy), [-1, 1], atol=1e-14)


def test_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        check_hermitian(np.array([[0, 1], [0, 0]]))
    with pytest.raises(DimensionError):
        check_hermitian(np.ones((2, 3)))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**31))
def test_trace_and_determinant_preserved(d, seed):
    h = random_hermitian(np.random.default_rng(seed), d)
    w = eigvals_hermitian(h)
    assert np.isclose(w.sum(), np.trace(h).real, atol=1e-9)
    assert np.all(np.diff(w) >= -1e-12)
