"""Steiner diversity of vertex sets and the Steiner Wiener indices built from it."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal

from . import kernels
from .combinatorics import binom, guard_subsets, k_subsets_colex
from .errors import CapacityError, InvalidParameterError
from .graph import Graph

BRUTEFORCE_MAX_N = 12
TOTAL_MAX_N = 14


@dataclass(frozen=True)
class TerminalSet:
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.members
        if any(b <= a for a, b in zip(m, m[1:])):
            raise InvalidParameterError(f"terminal set {m} must be sorted and duplicate-free")

    @property
    def k(self) -> int:
        return len(self.members)

    @classmethod
    def of(cls, g: Graph, vertices: Iterable[int]) -> TerminalSet:
        members = tuple(sorted(set(vertices)))
        if len(members) < 2:
            raise InvalidParameterError("a terminal set needs at least two vertices")
        if members[0] < 0 or members[-1] >= g.n:
            raise InvalidParameterError(f"terminal set {members} has ids outside 0..{g.n - 1}")
        return cls(members)


@dataclass(frozen=True)
class SteinerIndexSummary:
    k: int | Literal["total"]
    value: int
    average: Fraction


def _terminals(g: Graph, s: TerminalSet | Iterable[int]) -> TerminalSet:
    if isinstance(s, TerminalSet):
        if s.k < 2:
            raise InvalidParameterError("a terminal set needs at least two vertices")
        if s.members[0] < 0 or s.members[-1] >= g.n:
            raise InvalidParameterError(f"terminal set {s.members} has ids outside 0..{g.n - 1}")
        return s
    return TerminalSet.of(g, s)


def steiner_distance(g: Graph, s: TerminalSet | Iterable[int]) -> int:
    """Edges in a minimum Steiner tree on ``s`` (Dreyfus-Wagner, exact)."""
    s = _terminals(g, s)
    return kernels.steiner_dp(g.distance_array, g.n, s.members)


def steiner_distance_bruteforce(g: Graph, s: TerminalSet | Iterable[int]) -> int:
    """Oracle: smallest connected vertex superset of ``s``, minus one."""
    s = _terminals(g, s)
    if g.n > BRUTEFORCE_MAX_N:
        raise CapacityError(f"brute-force Steiner distance is limited to n <= {BRUTEFORCE_MAX_N}")
    others = [v for v in range(g.n) if v not in s.members]
    for extra in range(len(others) + 1):
        for pick in combinations(others, extra):
            if _induced_connected(g, set(s.members).union(pick)):
                return s.k + extra - 1
    raise AssertionError("connected graph must contain a spanning tree")


def _induced_connected(g: Graph, vertices: set[int]) -> bool:
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v in vertices and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(vertices)


def _check_k(g: Graph, k: int) -> None:
    if not 2 <= k <= g.n:
        raise InvalidParameterError(f"k must satisfy 2 <= k <= n={g.n}, got {k}")


def steiner_deltas(g: Graph, k: int, subsets: Iterable[tuple[int, ...]] | None = None) -> list[int]:
    """δ(A) for every k-subset in colex order (or for the given subsets)."""
    dist, n = g.distance_array, g.n
    if subsets is None:
        subsets = k_subsets_colex(n, k)
    return [kernels.steiner_dp(dist, n, a) for a in subsets]


def steiner_wiener_k(g: Graph, k: int) -> SteinerIndexSummary:
    _check_k(g, k)
    count = binom(g.n, k)
    guard_subsets(count, f"SW_{k} over n={g.n}")
    value = sum(steiner_deltas(g, k))
    return SteinerIndexSummary(k=k, value=value, average=Fraction(value, count))


def steiner_diversity_table(g: Graph) -> list[int]:
    """δ for all 2**n vertex masks at once (δ of the empty set and singletons is 0).

    Subset-lattice DP: connected induced subgraphs are flagged, then a
    superset-minimum transform gives each mask its smallest connected cover.
    """
    if g.n > TOTAL_MAX_N:
        raise CapacityError(f"all-subset Steiner table is limited to n <= {TOTAL_MAX_N}")
    sizes = kernels.min_connected_superset_sizes(g.adjacency_masks, g.n)
    return [max(size - 1, 0) for size in sizes]


def total_steiner_wiener(g: Graph, max_n: int = TOTAL_MAX_N) -> SteinerIndexSummary:
    """SW(G): δ summed over every vertex set with at least two members."""
    if g.n > max_n:
        raise CapacityError(f"total Steiner Wiener index is limited to n <= {max_n}, got {g.n}")
    if g.n > TOTAL_MAX_N:
        raise CapacityError(f"all-subset Steiner table is limited to n <= {TOTAL_MAX_N}")
    table = steiner_diversity_table(g)
    value = sum(table)
    count = 2**g.n - g.n - 1
    average = Fraction(value, count) if count else Fraction(0)
    return SteinerIndexSummary(k="total", value=value, average=average)
