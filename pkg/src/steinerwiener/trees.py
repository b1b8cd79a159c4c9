"""The N_k forest functional and the edge/vertex decompositions of SW_k on trees."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .combinatorics import binom
from .errors import InvalidParameterError, NotATreeError
from .graph import Graph


@dataclass(frozen=True)
class ForestPartition:
    component_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.component_sizes:
            raise InvalidParameterError("a forest has at least one component")
        if any(s < 1 for s in self.component_sizes):
            raise InvalidParameterError("component sizes must be positive")

    @classmethod
    def of(cls, sizes: Sequence[int]) -> ForestPartition:
        return cls(tuple(sizes))

    @property
    def p(self) -> int:
        return len(self.component_sizes)

    @property
    def vertex_count(self) -> int:
        return sum(self.component_sizes)


def _as_partition(fp: ForestPartition | Sequence[int]) -> ForestPartition:
    return fp if isinstance(fp, ForestPartition) else ForestPartition.of(fp)


def _check(k: int) -> None:
    if k < 2:
        raise InvalidParameterError(f"N_k needs k >= 2, got {k}")


def n_k(fp: ForestPartition | Sequence[int], k: int) -> int:
    """Number of k-vertex choices that touch at least two components.

    Inclusion-exclusion: C(N, k) minus the choices inside a single component.
    """
    fp = _as_partition(fp)
    _check(k)
    if fp.p == 1:
        return 0
    return binom(fp.vertex_count, k) - sum(binom(s, k) for s in fp.component_sizes)


def n_k_by_partitions(fp: ForestPartition | Sequence[int], k: int) -> int:
    """Literal sum over (l_1..l_p), Σ l_i = k, 0 <= l_i < k, of Π C(n(T_i), l_i).

    Components are folded in one at a time; ``ways[r]`` holds the partial sum
    over the tuples chosen so far whose parts add up to r.
    """
    fp = _as_partition(fp)
    _check(k)
    ways = [1] + [0] * k
    for size in fp.component_sizes:
        row = [binom(size, part) for part in range(min(size, k - 1) + 1)]
        nxt = [0] * (k + 1)
        for r, w in enumerate(ways):
            if w:
                for part, c in enumerate(row[: k + 1 - r]):
                    nxt[r + part] += w * c
        ways = nxt
    return ways[k]


def _tree_and_k(t: Graph, k: int) -> None:
    if not t.is_tree():
        raise NotATreeError(f"graph with n={t.n}, m={t.m} is not a tree")
    if not 2 <= k <= t.n:
        raise InvalidParameterError(f"k must satisfy 2 <= k <= n={t.n}, got {k}")


def edge_terms(t: Graph, k: int) -> dict[tuple[int, int], int]:
    """N_k(T - e) for every edge e."""
    _tree_and_k(t, k)
    return {e: n_k(t.components_without(removed_edges=[e]), k) for e in t.edges}


def vertex_terms(t: Graph, k: int) -> tuple[int, ...]:
    """N_k(T - v) for every vertex v; pendant vertices leave one component and give 0."""
    _tree_and_k(t, k)
    terms = []
    for v in range(t.n):
        if t.degree(v) <= 1:
            terms.append(0)
        else:
            terms.append(n_k(t.components_without(removed_vertices=[v]), k))
    return tuple(terms)


def sw_k_edge_decomposition(t: Graph, k: int) -> int:
    return sum(edge_terms(t, k).values())


def sw_k_vertex_decomposition(t: Graph, k: int) -> int:
    return sum(vertex_terms(t, k)) + (k - 1) * binom(t.n, k)


def wiener_by_edge_cuts(t: Graph) -> int:
    """Σ over edges of the product of the two side sizes."""
    if not t.is_tree():
        raise NotATreeError(f"graph with n={t.n}, m={t.m} is not a tree")
    total = 0
    for e in t.edges:
        a, b = t.components_without(removed_edges=[e])
        total += a * b
    return total
