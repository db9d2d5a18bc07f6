import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gael.exact import (
    ExactMatrix,
    entry_norm,
    identity,
    mat_mul,
    mat_pow,
    path_count_vector,
    prefix_powers,
    zeros,
)
from gael.graph import adjacency_matrix

from oracles import paths_ending

FIB = ExactMatrix([[1, 1], [1, 0]])


def test_mat_mul_examples():
    N = ExactMatrix([[0, 1], [0, 0]])
    assert mat_mul(N, N) == zeros(2)
    assert mat_mul(identity(2), FIB) == FIB
    # by hand: [[1*1+1*1, 1*1+1*0], [1*1+0*1, 1*1+0*0]]
    assert mat_mul(FIB, FIB).tolist() == [[2, 1], [1, 1]]
    with pytest.raises(ValueError):
        mat_mul(FIB, identity(3))


def test_mat_pow_examples():
    assert mat_pow(FIB, 0) == identity(2)
    assert mat_pow(FIB, 5).tolist() == [[8, 5], [5, 3]]
    assert mat_pow(ExactMatrix([[2]]), 10).tolist() == [[1024]]


def test_mat_pow_big():
    # exact beyond 64 bits
    assert mat_pow(ExactMatrix([[3]]), 200).rows[0][0] == 3**200


def test_entry_norm_examples():
    assert entry_norm(ExactMatrix([[1, 2], [3, 4]])) == 10
    assert entry_norm(zeros(3)) == 0
    assert entry_norm(mat_pow(ExactMatrix([[2]]), 5)) == 32


def test_path_count_examples(rose2, a2_graph, cycle2):
    assert path_count_vector(adjacency_matrix(rose2), 3) == (8,)
    assert path_count_vector(adjacency_matrix(a2_graph), 1) == (0, 1)
    assert path_count_vector(adjacency_matrix(cycle2), 4) == (1, 1)
    assert path_count_vector(adjacency_matrix(cycle2), 0) == (1, 1)


def test_path_counts_match_enumeration(corpus):
    for g in corpus.values():
        A = adjacency_matrix(g)
        for k in range(5):
            expected = paths_ending(g, k)
            assert path_count_vector(A, k) == tuple(expected[v] for v in g.vertices)


def square(n):
    rows = st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=n, max_size=n)
    return rows.map(ExactMatrix)


matrices = st.integers(1, 4).flatmap(square)
pairs = st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n)))


@given(pairs)
@settings(max_examples=100)
def test_norm_submultiplicative(ab):
    a, b = ab
    assert entry_norm(mat_mul(a, b)) <= entry_norm(a) * entry_norm(b)


@given(matrices, st.integers(0, 12))
@settings(max_examples=100)
def test_path_count_sum_is_norm(a, k):
    assert sum(path_count_vector(a, k)) == entry_norm(mat_pow(a, k))


@given(matrices, st.integers(0, 8), st.integers(0, 8))
@settings(max_examples=100)
def test_power_additive(a, s, t):
    assert mat_pow(a, s + t) == mat_mul(mat_pow(a, s), mat_pow(a, t))


@given(matrices, st.integers(0, 10))
@settings(max_examples=50)
def test_prefix_powers_agree(a, k):
    assert prefix_powers(a, k) == [mat_pow(a, j) for j in range(k + 1)]


def test_rejects_non_square():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]])
