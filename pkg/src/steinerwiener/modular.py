"""Modular/median recognition and the closed forms that hold on modular graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinatorics import binom
from .errors import IdentityViolation, InvalidParameterError, NonModularGraphError
from .graph import Graph, generate_family, wiener_index

# auto cross-checks against direct counting stay below this many vertices
CROSS_CHECK_MAX_N = 10


@dataclass(frozen=True)
class ModularityWitness:
    is_modular: bool
    is_median: bool
    violating_triple: tuple[int, int, int] | None = None
    ambiguous_triple: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        if self.is_median and not self.is_modular:
            raise ValueError("a median graph is modular")
        if self.is_modular == (self.violating_triple is not None):
            raise ValueError("exactly one of is_modular / violating_triple must hold")


def medians(g: Graph, x: int, y: int, z: int) -> list[int]:
    """Vertices lying on a geodesic between each pair of x, y, z."""
    d = g.distances.dist
    dx, dy, dz = d[x], d[y], d[z]
    dxy, dyz, dxz = dx[y], dy[z], dx[z]
    return [
        w
        for w in range(g.n)
        if dx[w] + dy[w] == dxy and dy[w] + dz[w] == dyz and dx[w] + dz[w] == dxz
    ]


def classify_modularity(g: Graph) -> ModularityWitness:
    ambiguous = None
    for x, y, z in combinations(range(g.n), 3):
        found = medians(g, x, y, z)
        if not found:
            return ModularityWitness(False, False, violating_triple=(x, y, z))
        if len(found) > 1 and ambiguous is None:
            ambiguous = (x, y, z)
    return ModularityWitness(True, ambiguous is None, ambiguous_triple=ambiguous)


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    colour[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                stack.append(v)
            elif colour[v] == colour[u]:
                return False
    return True


def _require_modular(g: Graph) -> None:
    witness = classify_modularity(g)
    if not witness.is_modular:
        raise NonModularGraphError(witness.violating_triple)


def sw3_formula_value(g: Graph) -> Fraction:
    """(n-2)/2 * W(G) for any connected graph, modular or not (diagnostics)."""
    return Fraction((g.n - 2) * wiener_index(g), 2)


def sw3_via_wiener(g: Graph) -> int:
    """SW_3 of a modular graph from its Wiener index alone."""
    _require_modular(g)
    twice = (g.n - 2) * wiener_index(g)
    if twice % 2:
        raise IdentityViolation(f"(n-2)W(G) = {twice} is odd on a modular graph")
    return twice // 2


def _average_b3_formula(g: Graph) -> Fraction:
    n = g.n
    return (Fraction((n - 2) * wiener_index(g), 2) - 2 * binom(n, 3)) / n


def average_b3_modular(g: Graph, cross_check: bool | None = None) -> Fraction:
    """Mean 3-Steiner betweenness of a modular graph via W(G).

    With ``cross_check`` (default: when n <= 10) the value is compared to the
    mean of directly counted B_3 values.
    """
    _require_modular(g)
    value = _average_b3_formula(g)
    if cross_check is None:
        cross_check = 3 <= g.n <= CROSS_CHECK_MAX_N
    if cross_check:
        from .counting import average_k_steiner_betweenness

        direct = average_k_steiner_betweenness(g, 3)
        if direct != value:
            raise IdentityViolation(f"average B_3: formula {value} vs counted {direct}")
    return value


def hypercube_wiener(d: int) -> int:
    return d * 4 ** (d - 1)


def hypercube_b3(d: int, cross_check: bool = False) -> Fraction:
    """Per-vertex B_3 of the d-cube: (2^(d-1) - 1)(d 2^(d-2) - (2^(d+1) - 2)/3).

    ``cross_check`` recounts B_3 on the generated cube and requires every
    vertex to match.
    """
    if d < 1:
        raise InvalidParameterError(f"hypercube dimension must be >= 1, got {d}")
    value = (2 ** (d - 1) - 1) * (Fraction(d * 2**d, 4) - Fraction(2 ** (d + 1) - 2, 3))
    if cross_check and d >= 2:
        from .counting import k_steiner_betweenness

        report = k_steiner_betweenness(generate_family("hypercube", [d]), 3)
        bad = [v for v, b in enumerate(report.per_vertex) if b != value]
        if bad:
            raise IdentityViolation(f"Q_{d}: B_3 differs from {value} at vertices {bad}")
    return value
