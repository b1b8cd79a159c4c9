"""Brute-force references, deliberately naive and independent of the library paths."""

from fractions import Fraction
from itertools import combinations

import networkx as nx

from steinerwiener import Graph

from conftest import to_nx


def spanning_trees_bruteforce(g: Graph) -> int:
    """Edge subsets of size n-1 that connect every vertex."""
    if g.n == 1:
        return 1
    count = 0
    for sub in combinations(g.edges, g.n - 1):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(sub)
        if nx.is_connected(h):
            count += 1
    return count


def geodesic_betweenness_bruteforce(g: Graph) -> list[Fraction]:
    h = to_nx(g)
    out = [Fraction(0)] * g.n
    for x, y in combinations(range(g.n), 2):
        paths = list(nx.all_shortest_paths(h, x, y))
        for v in range(g.n):
            if v in (x, y):
                continue
            through = sum(1 for p in paths if v in p)
            out[v] += Fraction(through, len(paths))
    return out


def wiener_bruteforce(g: Graph) -> int:
    h = to_nx(g)
    return sum(nx.shortest_path_length(h, u, v) for u, v in combinations(range(g.n), 2))


def steiner_distance_connected_subgraphs(g: Graph, terminals) -> int:
    """Minimum over all edge subsets forming a connected subgraph that spans the terminals."""
    terminals = set(terminals)
    for size in range(len(terminals) - 1, g.n):
        for sub in combinations(g.edges, size):
            h = nx.Graph()
            h.add_nodes_from(terminals)
            h.add_edges_from(sub)
            if nx.is_connected(h):
                return size
    raise AssertionError("unreachable for connected graphs")
