"""Counting minimum Steiner trees and the Steiner betweenness centralities.

A minimum Steiner tree on A has exactly δ(A)+1 vertices W and is a spanning
tree of G[W].  So σ_A is the sum of spanning-tree counts of G[W] over the
connected W ⊇ A with |W| = δ(A)+1, and σ_A(v) is the same sum restricted to
W containing v.  "Steiner tree" always means a *minimum* one here.
"""

from __future__ import annotations

import functools
from collections import defaultdict
from collections.abc import Iterable, Sequence
from concurrent.futures import Executor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from . import kernels
from .combinatorics import binom, guard_subsets, k_subsets_colex, mask_members, members_mask
from .errors import CapacityError, IdentityViolation
from .graph import Graph
from .steiner import (
    TerminalSet,
    _check_k,
    _terminals,
    steiner_distance,
    steiner_wiener_k,
    total_steiner_wiener,
)

ENUMERATION_MAX_N = 9
TOTAL_BETWEENNESS_MAX_N = 12
CACHE_SIZE = 1 << 16


@dataclass(frozen=True)
class SteinerTreeCount:
    """σ_A, the through-counts σ_A(v) for v outside A, and δ(A).

    ``through`` is shared with the per-set cache; treat it as read-only.
    """

    terminal_set: TerminalSet
    sigma: int
    through: dict[int, int] = field(hash=False)
    steiner_distance: int


@dataclass(frozen=True)
class CentralityReport:
    k: int | Literal["total"]
    per_vertex: tuple[Fraction, ...]
    sum: Fraction
    average: Fraction
    identity_residual: Fraction


# --------------------------------------------------------------------------
# spanning trees


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(size - 1):
        if a[i][i] == 0:
            pivot = next((r for r in range(i + 1, size) if a[r][i] != 0), None)
            if pivot is None:
                return 0
            a[i], a[pivot] = a[pivot], a[i]
            sign = -sign
        p = a[i][i]
        row_i = a[i]
        for r in range(i + 1, size):
            row_r = a[r]
            f = row_r[i]
            for c in range(i + 1, size):
                row_r[c] = (row_r[c] * p - f * row_i[c]) // prev
        prev = p
    return sign * a[-1][-1]


def _induced_spanning_tree_count(g: Graph, vertices: Sequence[int]) -> int:
    """Matrix-tree count for G[vertices]; 0 if that subgraph is disconnected."""
    if len(vertices) <= 1:
        return 1
    index = {v: i for i, v in enumerate(vertices)}
    size = len(vertices) - 1
    lap = [[0] * size for _ in range(size)]
    for v, i in index.items():
        if i == size:
            continue
        row = lap[i]
        for w in g.adjacency[v]:
            j = index.get(w)
            if j is None:
                continue
            row[i] += 1
            if j < size:
                row[j] -= 1
    return bareiss_determinant(lap)


def spanning_tree_count(g: Graph) -> int:
    return _induced_spanning_tree_count(g, range(g.n))


# --------------------------------------------------------------------------
# minimum Steiner tree counts


def count_steiner_trees(g: Graph, a: TerminalSet | Iterable[int]) -> SteinerTreeCount:
    a = _terminals(g, a)
    return _count_cached(g, a.members)


@functools.lru_cache(maxsize=CACHE_SIZE)
def _count_cached(g: Graph, members: tuple[int, ...]) -> SteinerTreeCount:
    k = len(members)
    delta = steiner_distance(g, TerminalSet(members))
    extra = delta + 1 - k
    outside = [v for v in range(g.n) if v not in members]
    guard_subsets(binom(len(outside), extra), f"Steiner tree count for {members}")
    masks = kernels.connected_supersets(g.adjacency_masks, members_mask(members), outside, extra)
    sigma = 0
    through = dict.fromkeys(outside, 0)
    for mask in masks:
        vertices = mask_members(mask)
        trees = _induced_spanning_tree_count(g, vertices)
        sigma += trees
        if extra:
            for v in vertices:
                if v in through:
                    through[v] += trees
    if sigma < 1:
        raise IdentityViolation(f"no minimum Steiner tree found for {members} at δ={delta}")
    return SteinerTreeCount(TerminalSet(members), sigma, through, delta)


def clear_cache() -> None:
    _count_cached.cache_clear()


def enumerate_min_steiner_trees(
    g: Graph, a: TerminalSet | Iterable[int]
) -> list[tuple[tuple[int, int], ...]]:
    """Oracle: every minimum Steiner tree on ``a`` as a sorted edge tuple.

    Grows subtrees from the smallest terminal by the include/exclude rule on
    frontier edges (each subtree is reached exactly once) and raises the edge
    budget from k-1 until some tree covers all terminals.  Shares nothing
    with :func:`count_steiner_trees`.
    """
    a = _terminals(g, a)
    if g.n > ENUMERATION_MAX_N:
        raise CapacityError(f"Steiner tree enumeration is limited to n <= {ENUMERATION_MAX_N}")
    terminals = frozenset(a.members)
    root = a.members[0]
    for budget in range(a.k - 1, g.n):
        found: list[tuple[tuple[int, int], ...]] = []
        _grow(g, terminals, budget, {root}, [], _frontier(g, root, {root}, set()), set(), found)
        if found:
            return sorted(found)
    raise AssertionError("connected graph must contain a Steiner tree")


def _frontier(g, v, tree_vertices, excluded):
    return [
        (v, w)
        for w in g.adjacency[v]
        if w not in tree_vertices and (min(v, w), max(v, w)) not in excluded
    ]


def _grow(g, terminals, budget, vertices, edges, frontier, excluded, found):
    if len(edges) == budget:
        if terminals <= vertices:
            found.append(tuple(sorted(edges)))
        return
    if budget - len(edges) < len(terminals - vertices):
        return
    # drop frontier edges that now close a cycle
    frontier = [e for e in frontier if e[1] not in vertices]
    if not frontier:
        return
    (u, w), rest = frontier[0], frontier[1:]
    key = (min(u, w), max(u, w))
    # include
    new_vertices = vertices | {w}
    _grow(
        g,
        terminals,
        budget,
        new_vertices,
        edges + [key],
        rest + _frontier(g, w, new_vertices, excluded),
        excluded,
        found,
    )
    # exclude
    _grow(g, terminals, budget, vertices, edges, rest, excluded | {key}, found)


# --------------------------------------------------------------------------
# betweenness


def _partial_betweenness(g: Graph, subsets: Sequence[tuple[int, ...]]):
    """Per-vertex numerators grouped by σ_A, so Fractions are built once per σ."""
    grouped: list[dict[int, int]] = [defaultdict(int) for _ in range(g.n)]
    for members in subsets:
        c = _count_cached(g, members)
        if c.steiner_distance + 1 == len(members):
            continue
        for v, t in c.through.items():
            if t:
                grouped[v][c.sigma] += t
    return [dict(d) for d in grouped]


def _partial_for(args):
    g, subsets = args
    return _partial_betweenness(g, subsets)


def _chunks(items: list, pieces: int) -> list[list]:
    pieces = max(1, min(pieces, len(items)))
    size = -(-len(items) // pieces)
    return [items[i:i + size] for i in range(0, len(items), size)]


def _betweenness_numerators(
    g: Graph, subsets: list[tuple[int, ...]], executor: Executor | None, workers: int
) -> list[dict[int, int]]:
    if executor is None or workers <= 1 or len(subsets) < 2:
        parts = [_partial_betweenness(g, subsets)]
    else:
        parts = list(executor.map(_partial_for, [(g, c) for c in _chunks(subsets, workers * 4)]))
    merged: list[dict[int, int]] = [defaultdict(int) for _ in range(g.n)]
    for part in parts:
        for v, d in enumerate(part):
            for sigma, num in d.items():
                merged[v][sigma] += num
    return merged


def _fold(numerators: dict[int, int]) -> Fraction:
    return sum((Fraction(num, sigma) for sigma, num in sorted(numerators.items())), Fraction(0))


def _k_betweenness_values(
    g: Graph, k: int, executor: Executor | None, workers: int
) -> tuple[Fraction, ...]:
    if k == g.n:
        return (Fraction(0),) * g.n
    guard_subsets(binom(g.n, k), f"B_{k} over n={g.n}")
    subsets = list(k_subsets_colex(g.n, k))
    merged = _betweenness_numerators(g, subsets, executor, workers)
    return tuple(_fold(d) for d in merged)


def _report(g, k, per_vertex, expected_sum) -> CentralityReport:
    total = sum(per_vertex, Fraction(0))
    return CentralityReport(
        k=k,
        per_vertex=per_vertex,
        sum=total,
        average=total / g.n,
        identity_residual=total - expected_sum,
    )


def k_steiner_betweenness(
    g: Graph, k: int, *, executor: Executor | None = None, workers: int = 1
) -> CentralityReport:
    """B_k(v) for every vertex; the residual checks Σ B_k = SW_k - (k-1)C(n,k)."""
    _check_k(g, k)
    values = _k_betweenness_values(g, k, executor, workers)
    sw = steiner_wiener_k(g, k).value
    return _report(g, k, values, Fraction(sw - (k - 1) * binom(g.n, k)))


def total_steiner_betweenness(
    g: Graph,
    *,
    max_n: int = TOTAL_BETWEENNESS_MAX_N,
    executor: Executor | None = None,
    workers: int = 1,
) -> CentralityReport:
    """B_S(v) = Σ_{k=2}^{n-1} B_k(v), checked against the total Steiner Wiener index."""
    n = g.n
    if n > max_n:
        raise CapacityError(f"total Steiner betweenness is limited to n <= {max_n}, got {n}")
    per_vertex = [Fraction(0)] * n
    for k in range(2, n):
        for v, b in enumerate(_k_betweenness_values(g, k, executor, workers)):
            per_vertex[v] += b
    sw = total_steiner_wiener(g).value
    return _report(g, "total", tuple(per_vertex), Fraction(sw - 2 ** (n - 1) * (n - 2) - 1))


def average_k_steiner_betweenness_sides(
    g: Graph, k: int, *, executor: Executor | None = None, workers: int = 1
) -> tuple[Fraction, Fraction]:
    """(mean of B_k over vertices, C(n,k)/n * (mean SW_k - k + 1))."""
    report = k_steiner_betweenness(g, k, executor=executor, workers=workers)
    avg_sw = steiner_wiener_k(g, k).average
    return report.average, Fraction(binom(g.n, k), g.n) * (avg_sw - k + 1)


def average_k_steiner_betweenness(
    g: Graph, k: int, *, executor: Executor | None = None, workers: int = 1
) -> Fraction:
    lhs, rhs = average_k_steiner_betweenness_sides(g, k, executor=executor, workers=workers)
    if lhs != rhs:
        raise IdentityViolation(f"average B_{k}: {lhs} from centralities vs {rhs} from SW_{k}")
    return lhs


def average_total_steiner_betweenness_sides(
    g: Graph, *, executor: Executor | None = None, workers: int = 1
) -> tuple[Fraction, Fraction]:
    n = g.n
    report = total_steiner_betweenness(g, executor=executor, workers=workers)
    avg_sw = total_steiner_wiener(g).average
    rhs = ((2**n - n - 1) * avg_sw - 2 ** (n - 1) * (n - 2) - 1) / n
    return report.average, rhs

