from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinerwiener import (
    CapacityError,
    Graph,
    average_k_steiner_betweenness,
    count_steiner_trees,
    enumerate_min_steiner_trees,
    generate_family,
    geodesic_betweenness,
    k_steiner_betweenness,
    spanning_tree_count,
    steiner_distance,
    total_steiner_betweenness,
)
from steinerwiener.counting import bareiss_determinant
from steinerwiener.trees import vertex_terms

from conftest import connected_atlas, connected_graphs, random_connected_corpus, random_tree_corpus
from oracles import spanning_trees_bruteforce


def test_bareiss_small_matrices():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[5]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[2, 3, 1], [4, 6, 2], [1, 0, 7]]) == 0
    assert bareiss_determinant([[0, 2, 1], [3, 1, 4], [1, 5, 9]]) == -32


def _leibniz(m):
    total = 0
    for perm in permutations(range(len(m))):
        inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for row, col in enumerate(perm):
            term *= m[row][col]
        total += term
    return total


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=200, deadline=None)
def test_bareiss_matches_leibniz(m):
    assert bareiss_determinant(m) == _leibniz(m)


def test_spanning_tree_examples():
    for t in random_tree_corpus(10):
        assert spanning_tree_count(t) == 1
    for n in range(3, 10):
        assert spanning_tree_count(generate_family("cycle", [n])) == n
    assert spanning_tree_count(generate_family("complete", [4])) == 16
    assert spanning_tree_count(generate_family("complete", [9])) == 9**7
    assert spanning_tree_count(generate_family("hypercube", [3])) == 384


def test_spanning_tree_matches_edge_subsets():
    for g in connected_atlas(6)[::3]:
        assert spanning_tree_count(g) == spanning_trees_bruteforce(g)


def test_count_c4_opposite():
    c = count_steiner_trees(generate_family("cycle", [4]), [0, 2])
    assert (c.sigma, c.through, c.steiner_distance) == (2, {1: 1, 3: 1}, 2)


def test_trees_have_unique_steiner_trees():
    for t in random_tree_corpus(20):
        for k in range(2, min(t.n, 4) + 1):
            for a in combinations(range(t.n), k):
                assert count_steiner_trees(t, a).sigma == 1


def test_complete_graph_counts():
    for n in range(2, 7):
        kn = generate_family("complete", [n])
        for k in range(2, n + 1):
            for a in combinations(range(n), k):
                c = count_steiner_trees(kn, a)
                assert c.sigma == k ** (k - 2)
                assert set(c.through.values()) <= {0}
                assert len(enumerate_min_steiner_trees(kn, a)) == k ** (k - 2)


def test_enumeration_examples():
    assert enumerate_min_steiner_trees(generate_family("path", [4]), [0, 3]) == [((0, 1), (1, 2), (2, 3))]
    assert len(enumerate_min_steiner_trees(generate_family("cycle", [4]), [0, 2])) == 2
    assert enumerate_min_steiner_trees(generate_family("cycle", [5]), [0, 1, 2]) == [((0, 1), (1, 2))]
    with pytest.raises(CapacityError):
        enumerate_min_steiner_trees(generate_family("path", [10]), [0, 9])


def _check_against_enumeration(g, a):
    c = count_steiner_trees(g, a)
    trees = enumerate_min_steiner_trees(g, a)
    assert c.sigma == len(trees)
    assert all(len(t) == c.steiner_distance for t in trees)
    for v, t in c.through.items():
        assert t == sum(1 for tree in trees if any(v in e for e in tree))
    return c


@given(connected_graphs(min_n=2, max_n=7))
@settings(max_examples=40, deadline=None)
def test_count_invariants(g):
    for k in range(2, g.n + 1):
        for a in combinations(range(g.n), k):
            c = _check_against_enumeration(g, a)
            assert c.sigma >= 1
            assert sum(c.through.values()) == (c.steiner_distance - k + 1) * c.sigma
            assert all(t <= c.sigma for t in c.through.values())
            assert set(c.through) == set(range(g.n)) - set(a)


def test_betweenness_examples():
    for n in range(2, 7):
        kn = generate_family("complete", [n])
        for k in range(2, n + 1):
            assert set(k_steiner_betweenness(kn, k).per_vertex) == {0}
            assert average_k_steiner_betweenness(kn, k) == 0
    q3 = k_steiner_betweenness(generate_family("hypercube", [3]), 3)
    assert q3.per_vertex == (4,) * 8 and q3.identity_residual == 0
    assert average_k_steiner_betweenness(generate_family("path", [4]), 3) == Fraction(1, 2)
    assert average_k_steiner_betweenness(generate_family("hypercube", [3]), 3) == 4


def test_trees_betweenness_is_nk_term():
    for t in random_tree_corpus(30):
        for k in range(2, t.n + 1):
            assert k_steiner_betweenness(t, k).per_vertex == vertex_terms(t, k)


def test_k_equals_n_is_zero():
    g = generate_family("cycle", [6])
    r = k_steiner_betweenness(g, 6)
    assert set(r.per_vertex) == {0} and r.identity_residual == 0


@given(connected_graphs(min_n=2, max_n=8))
@settings(max_examples=60, deadline=None)
def test_general_identity_and_report_shape(g):
    for k in range(2, g.n + 1):
        r = k_steiner_betweenness(g, k)
        assert r.identity_residual == 0
        assert r.sum == sum(r.per_vertex)
        assert r.average == r.sum / g.n
        assert r.sum.denominator == 1
        average_k_steiner_betweenness(g, k)


def test_b2_is_geodesic_betweenness():
    for g in random_connected_corpus(60):
        assert k_steiner_betweenness(g, 2).per_vertex == geodesic_betweenness(g)


def test_total_examples():
    for n in (2, 3):
        r = total_steiner_betweenness(generate_family("complete", [n]))
        assert set(r.per_vertex) == {0} and r.identity_residual == 0
    star = total_steiner_betweenness(generate_family("star", [4]))
    assert star.per_vertex == (4, 0, 0, 0) and star.identity_residual == 0


def test_total_star_against_enumeration():
    star = generate_family("star", [4])
    expected = 0
    for k in (2, 3):
        for a in combinations(range(1, 4), k):
            trees = enumerate_min_steiner_trees(star, a)
            expected += Fraction(sum(1 for t in trees if any(0 in e for e in t)), len(trees))
    assert total_steiner_betweenness(star).per_vertex[0] == expected == 4


def test_total_cap():
    with pytest.raises(CapacityError):
        total_steiner_betweenness(generate_family("path", [13]))


def test_parallel_matches_sequential():
    from concurrent.futures import ProcessPoolExecutor

    g = generate_family("gnp_connected", [9, 50], seed=11)
    with ProcessPoolExecutor(2) as ex:
        for k in (2, 3, 4):
            assert k_steiner_betweenness(g, k, executor=ex, workers=2) == k_steiner_betweenness(g, k)
        assert total_steiner_betweenness(g, executor=ex, workers=2) == total_steiner_betweenness(g)


def test_count_guard(monkeypatch):
    g = generate_family("path", [8])
    monkeypatch.setenv("STEINER_MAX_SUBSETS", "1")
    # path endpoints need all six interior vertices: C(6, 6) = 1 candidate set
    assert count_steiner_trees(g, [0, 7]).sigma == 1
    g2 = Graph.from_edges(8, g.edges + ((0, 2),))
    monkeypatch.setenv("STEINER_MAX_SUBSETS", "1")
    with pytest.raises(CapacityError):
        count_steiner_trees(g2, [0, 3, 5])
