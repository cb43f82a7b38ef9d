import numpy as np
import pytest

from combspec.blockmat import inflate
from combspec.chebyshev import eval_V
from combspec.eig_oracle import (
    TridiagonalSymmetric,
    det_dense,
    eig_dense,
    eig_tridiag,
    lu_det,
    sturm_count,
)
from combspec.errors import ConvergenceError, InvalidArgument
from combspec.graphs import adjacency, comb, path


def random_symmetric(rng, n):
    m = rng.normal(size=(n, n))
    return m + m.T


@pytest.mark.parametrize("n", [1, 2, 3, 7, 30, 81])
def test_eig_dense_against_lapack(n):
    a = random_symmetric(np.random.default_rng(n), n)
    np.testing.assert_allclose(eig_dense(a), np.linalg.eigvalsh(a), atol=1e-10)


def test_eig_dense_p4():
    np.testing.assert_allclose(
        eig_dense(adjacency(path(4))), [-1.618034, -0.618034, 0.618034, 1.618034], atol=1e-6
    )


@pytest.mark.parametrize("m", range(1, 51))
def test_eig_dense_paths(m):
    expected = np.sort(2 * np.cos(np.arange(1, m + 1) * np.pi / (m + 1)))
    np.testing.assert_allclose(eig_dense(adjacency(path(m))), expected, atol=1e-9)


def test_eig_dense_inflation_multiplicities():
    rng = np.random.default_rng(3)
    a = random_symmetric(rng, 3)
    eig = eig_dense(inflate(a, 3).realization)
    np.testing.assert_allclose(eig, np.repeat(np.linalg.eigvalsh(a), 3), atol=1e-10)


def test_eig_dense_rejects_asymmetric():
    with pytest.raises(InvalidArgument):
        eig_dense([[0.0, 1.0], [1.0 + 1e-15, 0.0]])
    with pytest.raises(InvalidArgument):
        eig_dense(np.zeros((2, 3)))


def test_eig_dense_sweep_budget():
    a = random_symmetric(np.random.default_rng(0), 20)
    with pytest.raises(ConvergenceError):
        eig_dense(a, max_sweeps=1)


def test_eig_dense_zero_matrix():
    np.testing.assert_array_equal(eig_dense(np.zeros((3, 3))), np.zeros(3))


@pytest.mark.parametrize("N", [1, 2, 5, 40])
def test_tridiag_free_laplacian(N):
    expected = np.sort(2 * np.cos(np.arange(1, N + 1) * np.pi / (N + 1)))
    np.testing.assert_allclose(eig_tridiag(TridiagonalSymmetric.free(N)), expected, atol=1e-11)


@pytest.mark.parametrize("seed", range(20))
def test_tridiag_against_dense(seed):
    rng = np.random.default_rng(seed)
    N = int(rng.integers(2, 300)) if seed < 5 else int(rng.integers(2, 40))
    T = TridiagonalSymmetric(rng.normal(size=N), rng.uniform(0.1, 2.0, N - 1))
    np.testing.assert_allclose(eig_tridiag(T), eig_dense(T.to_dense()), atol=1e-9)


def test_sturm_window_counts_random():
    rng = np.random.default_rng(11)
    for _ in range(100):
        N = int(rng.integers(1, 25))
        T = TridiagonalSymmetric(rng.normal(size=N), rng.normal(size=N - 1))
        full = eig_dense(T.to_dense())
        lo, hi = np.sort(rng.uniform(-3, 3, 2))
        inside = eig_tridiag(T, (lo, hi))
        assert len(inside) == int(((full >= lo) & (full < hi)).sum())
        assert sturm_count(T, hi) - sturm_count(T, lo) == len(inside)
        # the window (2, 3) in particular
        assert len(eig_tridiag(T, (2.0, 3.0))) == int(((full >= 2.0) & (full < 3.0)).sum())


def test_tridiag_empty_window():
    with pytest.raises(InvalidArgument):
        eig_tridiag(TridiagonalSymmetric.free(3), (1.0, 1.0))
    assert eig_tridiag(TridiagonalSymmetric.free(3), (2.5, 3.0)).size == 0


@pytest.mark.parametrize("m", range(1, 11))
def test_det_dense_is_chebyshev(m):
    a = adjacency(path(m))
    for lam in (-2.3, -0.4, 0.77, 1.9, 3.1):
        assert det_dense(a, lam) == pytest.approx(eval_V(m, lam), rel=1e-10, abs=1e-12)


def test_det_dense_vanishes_at_eigenvalues():
    a = adjacency(comb(3, 3))
    for lam in eig_dense(a):
        assert abs(det_dense(a, lam)) < 1e-6


def test_lu_det_random():
    rng = np.random.default_rng(5)
    for n in range(1, 15):
        m = rng.normal(size=(n, n))
        assert lu_det(m) == pytest.approx(np.linalg.det(m), rel=1e-9)
