from array import array
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinerwiener import _pykernels, kernels

from conftest import connected_graphs

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="Cython kernels not built")


def test_backend_reported():
    assert kernels.BACKEND in {"cython", "python"}


@needs_compiled
@given(connected_graphs(min_n=2, max_n=9), st.data())
@settings(max_examples=150, deadline=None)
def test_steiner_dp_backends_agree(g, data):
    k = data.draw(st.integers(2, g.n))
    terms = sorted(data.draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k, unique=True)))
    dist = g.distance_array
    assert compiled.steiner_dp(dist, g.n, terms) == _pykernels.steiner_dp(dist, g.n, terms)


@needs_compiled
@given(connected_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_superset_table_backends_agree(g):
    adj = list(g.adjacency_masks)
    assert compiled.min_connected_superset_sizes(adj, g.n) == _pykernels.min_connected_superset_sizes(adj, g.n)


@needs_compiled
@given(connected_graphs(min_n=2, max_n=9), st.data())
@settings(max_examples=100, deadline=None)
def test_connected_supersets_backends_agree(g, data):
    base = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    mask = sum(1 << v for v in base)
    outside = [v for v in range(g.n) if v not in base]
    extra = data.draw(st.integers(0, len(outside)))
    adj = list(g.adjacency_masks)
    assert compiled.connected_supersets(adj, mask, outside, extra) == _pykernels.connected_supersets(
        adj, mask, outside, extra
    )
    for m in range(1 << g.n):
        assert compiled.is_connected_mask(adj, m) == _pykernels.is_connected_mask(adj, m)


def test_connected_supersets_edge_cases():
    adj = [0b10, 0b101, 0b10]  # path 0-1-2
    for impl in filter(None, (_pykernels, compiled)):
        assert impl.connected_supersets(adj, 0b101, [1], 0) == []
        assert impl.connected_supersets(adj, 0b101, [1], 1) == [0b111]
        assert impl.connected_supersets(adj, 0b101, [1], 2) == []
        assert impl.steiner_dp(array("i", [0, 1, 2, 1, 0, 1, 2, 1, 0]), 3, [0]) == 0
