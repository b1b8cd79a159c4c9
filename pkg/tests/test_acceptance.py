"""Exit criteria, one test each; every test prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` (lines print either way).
"""

import io
import os
import time
from contextlib import contextmanager, redirect_stdout
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest

from steinerwiener import (
    NonModularGraphError,
    average_k_steiner_betweenness,
    count_steiner_trees,
    enumerate_min_steiner_trees,
    generate_family,
    geodesic_betweenness,
    hypercube_b3,
    k_steiner_betweenness,
    steiner_distance,
    steiner_wiener_k,
    sw3_via_wiener,
    sw_k_edge_decomposition,
    sw_k_vertex_decomposition,
    total_steiner_betweenness,
    total_steiner_wiener,
    wiener_index,
)
from steinerwiener.cli import main
from steinerwiener.modular import sw3_formula_value
from steinerwiener.prng import SplitMix64

from conftest import connected_atlas, random_connected_corpus, random_tree_corpus


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(label):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\n[FAIL] {label} ({time.perf_counter() - start:.1f}s)")
            raise
        with capsys.disabled():
            print(f"\n[PASS] {label} ({time.perf_counter() - start:.1f}s)")

    return run


@pytest.fixture(scope="module")
def corpus():
    return random_connected_corpus(200)


def test_c1_general_vertex_decomposition(criterion, corpus):
    with criterion("C1 sum_v B_k(v) + (k-1)C(n,k) = SW_k, 200 graphs, k in [2, min(n,5)], residual 0"):
        start = time.perf_counter()
        assert len(corpus) == 200 and {g.n for g in corpus} == set(range(4, 10))
        checked = 0
        for g in corpus:
            for k in range(2, min(g.n, 5) + 1):
                r = k_steiner_betweenness(g, k)
                sw = steiner_wiener_k(g, k).value
                assert r.sum + (k - 1) * comb(g.n, k) - sw == 0
                assert r.identity_residual == 0
                checked += 1
        assert checked == sum(min(g.n, 5) - 1 for g in corpus)
        assert time.perf_counter() - start < 300


def test_c2_tree_decompositions(criterion):
    with criterion("C2 edge = vertex decomposition = DP SW_k, 100 random trees, k in [2, min(n,6)]"):
        start = time.perf_counter()
        trees = random_tree_corpus(100)
        assert {t.n for t in trees} == set(range(2, 13)) and all(t.is_tree() for t in trees)
        for t in trees:
            for k in range(2, min(t.n, 6) + 1):
                sw = steiner_wiener_k(t, k).value
                assert sw_k_edge_decomposition(t, k) == sw
                assert sw_k_vertex_decomposition(t, k) == sw
        assert time.perf_counter() - start < 60


def test_c3_k2_degeneration(criterion, corpus):
    with criterion("C3 SW_2 = W, B_2 = geodesic B per vertex, sum B = W - C(n,2) on the C1 corpus"):
        for g in corpus:
            w = wiener_index(g)
            b = geodesic_betweenness(g)
            assert steiner_wiener_k(g, 2).value == w
            assert k_steiner_betweenness(g, 2).per_vertex == b
            assert sum(b, Fraction(0)) - (w - comb(g.n, 2)) == 0


def _assert_counts_match(g, members):
    c = count_steiner_trees(g, members)
    trees = enumerate_min_steiner_trees(g, members)
    assert c.sigma == len(trees)
    for v in range(g.n):
        if v in members:
            continue
        assert c.through[v] == sum(1 for t in trees if any(v in e for e in t))


def test_c4_counting_oracle(criterion, corpus):
    with criterion("C4 sigma_A and sigma_A(v) equal brute-force enumeration (n<=6 all sets; n=7,8)"):
        start = time.perf_counter()
        small = connected_atlas(6, min_n=2)
        assert len(small) == 142
        for g in small:
            for k in range(2, g.n + 1):
                for a in combinations(range(g.n), k):
                    _assert_counts_match(g, a)
        rng = SplitMix64(2024)
        larger = [g for g in corpus if g.n == 7][:10] + [g for g in corpus if g.n == 8][:10]
        for g in larger:
            all_sets = [a for k in range(2, g.n + 1) for a in combinations(range(g.n), k)]
            if g.n == 7:
                chosen = all_sets  # only 120 sets exist; check every one
            else:
                chosen = [all_sets[i] for i in rng.sample(len(all_sets), 200)]
                assert len(set(chosen)) == 200
            for a in chosen:
                _assert_counts_match(g, a)
        assert time.perf_counter() - start < 600


def test_c5_modular_theorem(criterion):
    with criterion("C5 SW_3 = (n-2)/2 W on trees, grids<=4x4, K_ab (a+b<=8), Q_1..Q_3; C_5 rejected"):
        graphs = [t for t in random_tree_corpus(100)]
        graphs += [generate_family("grid", [r, c]) for r in range(1, 5) for c in range(1, 5)]
        graphs += [generate_family("complete_bipartite", [a, b]) for a in range(1, 8) for b in range(1, 9 - a)]
        graphs += [generate_family("hypercube", [d]) for d in (1, 2, 3)]
        for g in graphs:
            # n < 3: both sides are empty sums
            direct = steiner_wiener_k(g, 3).value if g.n >= 3 else 0
            assert sw3_via_wiener(g) == direct
            assert sw3_formula_value(g) == direct
        c5 = generate_family("cycle", [5])
        with pytest.raises(NonModularGraphError):
            sw3_via_wiener(c5)
        assert steiner_wiener_k(c5, 3).value == 25
        assert sw3_formula_value(c5) == Fraction(45, 2)


def test_c6_hypercube_closed_form(criterion):
    with criterion("C6 B_3(v) = 4 on all 8 vertices of Q_3 = closed form at d=3; mean B_3(Q_2) = 0"):
        q3 = generate_family("hypercube", [3])
        assert wiener_index(q3) == 3 * 4**2 == 48
        assert hypercube_b3(3) == 4
        assert k_steiner_betweenness(q3, 3).per_vertex == (Fraction(4),) * 8
        assert average_k_steiner_betweenness(generate_family("hypercube", [2]), 3) == 0
        assert hypercube_b3(2) == 0


def test_c7_total_theorem(criterion, corpus):
    with criterion("C7 sum_v B_S(v) + 2^(n-1)(n-2) + 1 = SW on corpus n<=7 plus K2, K3, K_1,3, P5, C6"):
        graphs = [g for g in corpus if g.n <= 7]
        graphs += [
            generate_family("complete", [2]),
            generate_family("complete", [3]),
            generate_family("star", [4]),
            generate_family("path", [5]),
            generate_family("cycle", [6]),
        ]
        for g in graphs:
            r = total_steiner_betweenness(g)
            sw = total_steiner_wiener(g).value
            assert r.sum + 2 ** (g.n - 1) * (g.n - 2) + 1 - sw == 0
            assert r.identity_residual == 0


def test_c8_diversity_axioms(criterion):
    with criterion("C8 (D1) and (D2) for delta, all connected graphs n<=6, all subset triples"):
        for g in connected_atlas(6):
            size = 1 << g.n
            delta = np.zeros(size, dtype=np.int64)
            pop = np.zeros(size, dtype=np.int64)
            for mask in range(size):
                members = [v for v in range(g.n) if mask >> v & 1]
                pop[mask] = len(members)
                if len(members) >= 2:
                    delta[mask] = steiner_distance(g, members)
            assert (delta >= 0).all() and ((delta == 0) == (pop <= 1)).all()
            masks = np.arange(size)
            a, b, c = masks[:, None, None], masks[None, 1:, None], masks[None, None, :]
            assert (delta[a | b] + delta[b | c] >= delta[a | c]).all()


def _family_matrix():
    cases = []
    cases += [("random-tree", [n], s) for n in (2, 5, 8, 11) for s in (1, 2)]
    cases += [("path", [n], None) for n in (2, 4, 7)]
    cases += [("cycle", [n], None) for n in (3, 4, 5, 6)]
    cases += [("star", [n], None) for n in (3, 5)]
    cases += [("complete", [n], None) for n in (2, 4, 5)]
    cases += [("complete-bipartite", [a, b], None) for a, b in ((1, 3), (2, 3), (3, 3))]
    cases += [("grid", [r, c], None) for r, c in ((2, 2), (2, 3), (3, 3), (4, 4))]
    cases += [("hypercube", [d], None) for d in (1, 2, 3)]
    cases += [("gnp-connected", [5 + s % 4], s) for s in range(25)]
    return cases


def _verify_all(threads):
    chunks = []
    for family, params, seed in _family_matrix():
        argv = ["verify", "--suite", "all", "--family", family, "--params", *map(str, params), "--threads", str(threads)]
        if seed is not None:
            argv += ["--seed", str(seed)]
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(argv)
        assert code == 0, (family, params, seed)
        chunks.append(buf.getvalue())
    return "".join(chunks).encode()


def test_c9_determinism(criterion):
    counts = sorted({1, 2, os.cpu_count() or 1})
    with criterion(f"C9 verify --suite all byte-identical at threads {counts}"):
        outputs = {t: _verify_all(t) for t in counts}
        reference = outputs[1]
        assert all(out == reference for out in outputs.values())
