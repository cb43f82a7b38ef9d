import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combspec.blockmat import (
    ScalarTypeBlockMatrix,
    comb_det_schur,
    comb_partition,
    comb_schur_complement,
    inflate,
    path_matrix,
    schur_det,
)
from combspec.chebyshev import eval_V, greens_function
from combspec.eig_oracle import det_dense, eig_dense
from combspec.errors import InvalidArgument, SingularBlockError
from combspec.finite_spectrum import char_poly_eval
from combspec.graphs import adjacency, comb


def test_inflate_identity():
    np.testing.assert_array_equal(inflate(np.eye(3), 4).realization, np.eye(12))
    assert inflate([[2.0]], 5).dim == 5


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_det_is_power_of_symbol_det(m, n, seed):
    a = np.random.default_rng(seed).normal(size=(m, m))
    block = inflate(a, n)
    expected = np.linalg.det(a) ** n
    assert block.det() == pytest.approx(expected, rel=1e-8, abs=1e-12)
    assert np.linalg.det(block.realization) == pytest.approx(expected, rel=1e-8, abs=1e-12)


def test_spectrum_multiplicities():
    a = path_matrix(4)
    eig = eig_dense(inflate(a, 3).realization)
    np.testing.assert_allclose(eig, np.repeat(np.linalg.eigvalsh(a), 3), atol=1e-10)


def test_two_by_two_scalar_type():
    a, b, c, d = 2.0, -1.0, 0.5, 3.0
    block = inflate([[a, b], [c, d]], 4)
    assert block.det() == pytest.approx((a * d - b * c) ** 4)


def test_combine_and_inverse():
    x = inflate(path_matrix(3), 2)
    y = inflate(np.eye(3), 2)
    z = x.combine(2.0, y, -1.0)
    np.testing.assert_allclose(z.realization, 2 * x.realization - y.realization)
    inv = inflate([[2.0, 1.0], [1.0, 3.0]], 3).inverse()
    np.testing.assert_allclose(
        inv.realization @ inflate([[2.0, 1.0], [1.0, 3.0]], 3).realization, np.eye(6), atol=1e-14
    )
    with pytest.raises(InvalidArgument):
        x.combine(1.0, inflate(np.eye(3), 3), 1.0)


def test_rejects_bad_symbols():
    with pytest.raises(InvalidArgument):
        ScalarTypeBlockMatrix(np.zeros((2, 3)), 2)
    with pytest.raises(InvalidArgument):
        ScalarTypeBlockMatrix(np.eye(2), 0)


def test_schur_det_random_partitions():
    rng = np.random.default_rng(2)
    for _ in range(50):
        p, q = rng.integers(1, 6, 2)
        m = rng.normal(size=(p + q, p + q))
        A, B, C, D = m[:p, :p], m[:p, p:], m[p:, :p], m[p:, p:]
        direct = np.linalg.det(m)
        assert schur_det(A, B, C, D, "D") == pytest.approx(direct, rel=1e-8, abs=1e-10)
        assert schur_det(A, B, C, D, "A") == pytest.approx(direct, rel=1e-8, abs=1e-10)


def test_schur_det_singular_pivot():
    A, B, C = np.eye(2), np.eye(2), np.eye(2)
    D = np.array([[1.0, 1.0], [1.0, 1.0]])
    with pytest.raises(SingularBlockError):
        schur_det(A, B, C, D, "D")
    with pytest.raises(InvalidArgument):
        schur_det(A, B, C, D, "X")


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("lam", [2.5, 3.0, -3.0])
def test_comb_determinant_chain(n, k, lam):
    part = comb_partition(n, k, lam)
    # the partition is lam I - A in level labelling
    np.testing.assert_array_equal(part.assemble(), lam * np.eye(n * k) - adjacency(comb(n, k)))
    complement, g = comb_schur_complement(n, k, lam)
    # B D^-1 C collapses to G_{k-1}(lam) I_n
    np.testing.assert_allclose(
        complement, (lam - g) * np.eye(n) - path_matrix(n), atol=1e-12
    )
    assert g == pytest.approx(greens_function(k - 1, lam))
    # |D| = V_{k-1}(lam)^n and |complement| = V_n(v_k(lam))
    d_det = part.bottom_right.det()
    assert d_det == pytest.approx(eval_V(k - 1, lam) ** n, rel=1e-10)
    direct = det_dense(adjacency(comb(n, k)), lam)
    assert comb_det_schur(n, k, lam) == pytest.approx(direct, rel=1e-10)
    assert char_poly_eval(n, k, lam) == pytest.approx(direct, rel=1e-10)


def test_charpol_at_three():
    a = adjacency(comb(3, 3))
    assert char_poly_eval(3, 3, 3.0) == pytest.approx(det_dense(a, 3.0), rel=1e-12)


def test_comb_schur_falls_back_to_other_pivot():
    # lam = 0 is a zero of V_1, so D = inflate(lam - J_1) is singular; lam - J_2 is not
    direct = det_dense(adjacency(comb(2, 2)), 0.0)
    assert comb_det_schur(2, 2, 0.0) == pytest.approx(direct, abs=1e-12)
    with pytest.raises(SingularBlockError):
        comb_schur_complement(2, 2, 0.0)


def test_comb_partition_rejects_small_k():
    with pytest.raises(InvalidArgument):
        comb_partition(3, 1, 0.5)
