import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combspec.blockmat import path_matrix
from combspec.eig_oracle import eig_dense
from combspec.errors import InvalidArgument
from combspec.graphs import (
    CombSpec,
    Graph,
    adjacency,
    comb,
    comb_product,
    copy_by_copy_permutation,
    couple_with_bridge,
    path,
    truncated_tail,
)


def inflation_form(n, k):
    """Adjacency assembled blockwise: J_n in the corner, I_n wherever J_k has a 1."""
    corner = np.zeros((k, k))
    corner[0, 0] = 1.0
    return np.kron(corner, path_matrix(n)) + np.kron(path_matrix(k), np.eye(n))


def is_isomorphic_to_path(g):
    deg = g.degrees()
    return g.is_connected() and g.size == g.order - 1 and max(deg, default=0) <= 2


def test_path_basics():
    assert path(1).order == 1 and path(1).size == 0
    assert path(4).order == 4 and path(4).size == 3
    np.testing.assert_array_equal(adjacency(path(2)), [[0, 1], [1, 0]])


def test_path_rejects_zero():
    with pytest.raises(InvalidArgument):
        path(0)


def test_graph_rejects_self_loop_and_out_of_range():
    with pytest.raises(InvalidArgument):
        Graph(3, frozenset({(2, 2)}))
    with pytest.raises(InvalidArgument):
        Graph(3, frozenset({(1, 4)}))
    with pytest.raises(InvalidArgument):
        Graph.from_edges(3, [(1, 2), (2, 1)])


def test_comb_2_2_is_p4():
    g = comb_product(path(2), path(2), 1)
    assert g.order == 4
    assert is_isomorphic_to_path(g)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_comb_single_backbone_is_path(k):
    assert is_isomorphic_to_path(comb_product(path(1), path(k), 1))


@pytest.mark.parametrize("n", [1, 3, 6])
def test_comb_single_finger_vertex_is_path(n):
    g = comb_product(path(n), path(1), 1)
    assert g == path(n)


def test_comb_rejects_interior_contact():
    with pytest.raises(InvalidArgument):
        comb_product(path(3), path(3), 2)
    with pytest.raises(InvalidArgument):
        comb_product(path(3), path(3), 4)


def test_comb_other_endpoint_gives_same_graph():
    assert comb_product(path(4), path(3), 3) == comb_product(path(4), path(3), 1)


def test_couple_with_bridge():
    assert couple_with_bridge(path(1), 1, path(1), 1) == path(2)
    g = couple_with_bridge(comb(3, 2), 3, path(5), 1)
    assert g.order == 6 + 5
    assert (3, 7) in g.edges
    with pytest.raises(InvalidArgument):
        couple_with_bridge(path(2), 3, path(2), 1)


def test_truncated_tail_shape():
    g = truncated_tail((2, 2), 1)
    assert g.order == 5
    assert g.degree(2) == 3
    g = truncated_tail(CombSpec(4, 3), 60)
    assert g.order == 72 and g.degree(4) == 3 and g.is_connected()


def test_p4_spectrum_via_oracle():
    phi = (1 + 5**0.5) / 2
    expected = np.sort([phi, -phi, 1 / phi, -1 / phi])
    np.testing.assert_allclose(eig_dense(adjacency(comb(2, 2))), expected, atol=1e-12)


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("k", range(1, 13))
def test_adjacency_matches_inflation_form(n, k):
    np.testing.assert_array_equal(adjacency(comb(n, k)), inflation_form(n, k))


@pytest.mark.parametrize("n,k", [(2, 3), (4, 4), (6, 3), (5, 7)])
def test_copy_by_copy_relabelling_is_isospectral(n, k):
    g = comb(n, k)
    h = g.relabel(copy_by_copy_permutation(n, k))
    a = adjacency(h)
    # first finger occupies 1..k, fingers joined through their contact vertices
    expected_first_block = path_matrix(k)
    np.testing.assert_array_equal(a[:k, :k], expected_first_block)
    assert a[0, k] == 1.0
    np.testing.assert_allclose(eig_dense(a), eig_dense(adjacency(g)), atol=1e-10)


@pytest.mark.parametrize("n,k", [(3, 2), (5, 3), (8, 6)])
def test_max_degree_three(n, k):
    assert comb(n, k).max_degree() == 3
    assert truncated_tail((n, k), 50).max_degree() == 3


@pytest.mark.parametrize("k", [2, 3, 7])
def test_two_vertex_backbone_has_degree_two(k):
    # both backbone vertices are path endpoints; only the tail raises one to 3
    assert comb(2, k).max_degree() == 2
    assert truncated_tail((2, k), 50).max_degree() == 3


@given(st.integers(1, 9), st.integers(1, 9))
@settings(max_examples=40, deadline=None)
def test_comb_invariants(n, k):
    g = comb(n, k)
    a = adjacency(g)
    assert g.order == n * k == CombSpec(n, k).order
    assert g.is_connected()
    np.testing.assert_array_equal(a, a.T)
    assert not a.diagonal().any()
    np.testing.assert_array_equal(a.sum(axis=1), g.degrees())


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 20))
@settings(max_examples=30, deadline=None)
def test_json_round_trip(n, k, L):
    g = truncated_tail((n, k), L)
    text = g.to_json()
    assert Graph.from_json(text) == g
    assert Graph.from_json(text).to_json() == text
    edges = Graph.from_json(text).to_dict()["edges"]
    assert edges == sorted(edges) and all(i < j for i, j in edges)
