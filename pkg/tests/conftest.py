import networkx as nx
import pytest
from hypothesis import strategies as st

from steinerwiener import Graph, generate_family


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in h.edges()])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def connected_atlas(max_n: int, min_n: int = 1) -> list[Graph]:
    """Every connected graph on min_n..max_n vertices, one per isomorphism class (max_n <= 7)."""
    return [
        from_nx(h)
        for h in nx.graph_atlas_g()
        if min_n <= h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]


DENSITIES = (30, 45, 60, 75, 90)


def random_connected_corpus(count: int = 200) -> list[Graph]:
    """The fixed-seed corpus: n cycles through 4..9, edge percentage through DENSITIES."""
    return [
        generate_family("gnp_connected", [4 + i % 6, DENSITIES[(i // 6) % len(DENSITIES)]], seed=i)
        for i in range(count)
    ]


def random_tree_corpus(count: int = 100) -> list[Graph]:
    return [generate_family("random_tree", [2 + i % 11], seed=1000 + i) for i in range(count)]


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def atlas_upto6():
    return connected_atlas(6)


@pytest.fixture(scope="session")
def atlas_upto7():
    return connected_atlas(7)
