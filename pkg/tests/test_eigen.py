import numpy as np
import pytest
from numpy.testing import assert_allclose

import ginipca as gp


def random_symmetric(rng, k):
    a = rng.standard_normal((k, k))
    return a + a.T


def test_eigenvalues_match_lapack():
    rng = np.random.default_rng(21)
    for _ in range(50):
        k = int(rng.integers(2, 11))
        s = random_symmetric(rng, k)
        dec = gp.symmetric_eigen(s)
        ref = np.sort(np.linalg.eigvalsh(s))[::-1]
        assert_allclose(dec.lambdas, ref, rtol=1e-11, atol=1e-11)


def test_eigenvectors_match_lapack_up_to_sign():
    rng = np.random.default_rng(22)
    q, _ = np.linalg.qr(rng.standard_normal((5, 5)))
    lam = np.array([9.0, 5.0, 2.0, 1.0, -3.0])
    s = (q * lam) @ q.T
    s = 0.5 * (s + s.T)
    dec = gp.symmetric_eigen(s)
    w, v = np.linalg.eigh(s)
    order = np.argsort(-w)
    assert_allclose(np.abs(dec.vectors), np.abs(v[:, order]), atol=1e-9)


def test_decomposition_reconstructs_the_matrix():
    rng = np.random.default_rng(23)
    for _ in range(20):
        k = int(rng.integers(2, 9))
        s = random_symmetric(rng, k)
        dec = gp.symmetric_eigen(s)
        rebuilt = (dec.vectors * dec.lambdas) @ dec.vectors.T
        assert_allclose(rebuilt, s, atol=1e-12 * max(1.0, np.linalg.norm(s)))


def test_vectors_are_orthonormal():
    rng = np.random.default_rng(24)
    s = random_symmetric(rng, 7)
    b = gp.symmetric_eigen(s).vectors
    assert_allclose(b.T @ b, np.eye(7), atol=1e-12)


def test_descending_order_and_halved_mus():
    dec = gp.symmetric_eigen(np.diag([1.0, 5.0, 3.0]))
    assert_allclose(dec.lambdas, [5.0, 3.0, 1.0])
    assert_allclose(dec.mus, [2.5, 1.5, 0.5])


def test_shares_are_scaled_by_total_absolute_mass():
    # A negative eigenvalue keeps its sign and shrinks every other share,
    # so the column no longer sums to 100.
    dec = gp.symmetric_eigen(np.diag([3.0, 1.0, -1.0]))
    assert_allclose(dec.shares, [60.0, 20.0, -20.0])


def test_zero_matrix_has_zero_shares_not_nan():
    dec = gp.symmetric_eigen(np.zeros((3, 3)))
    assert_allclose(dec.lambdas, np.zeros(3))
    assert not np.isnan(dec.shares).any()
    assert_allclose(dec.shares, np.zeros(3))


def test_identity_input_keeps_the_column_order():
    # Equal eigenvalues must not be shuffled by the sort.
    dec = gp.symmetric_eigen(np.eye(4))
    assert_allclose(dec.vectors, np.eye(4))
    assert_allclose(dec.shares, np.full(4, 25.0))


def test_sign_convention_puts_the_largest_component_positive():
    rng = np.random.default_rng(25)
    for _ in range(20):
        dec = gp.symmetric_eigen(random_symmetric(rng, 6))
        for col in dec.vectors.T:
            assert col[np.argmax(np.abs(col))] > 0.0


def test_clearly_asymmetric_input_is_rejected():
    s = np.eye(3)
    s[0, 1] = 1e-6
    with pytest.raises(gp.ContractError):
        gp.symmetric_eigen(s)


def test_symmetrize_adds_the_transpose():
    gc = np.array([[1.0, 0.25], [0.5, 1.0]])
    assert_allclose(gp.symmetrize(gc), gc + gc.T)


def test_symmetrize_unwraps_the_correlation_result():
    rng = np.random.default_rng(26)
    X = rng.standard_normal((15, 3))
    gc = gp.gini_correlation_matrix(X, 2.0)
    assert np.array_equal(gp.symmetrize(gc), gc.gc + gc.gc.T)
