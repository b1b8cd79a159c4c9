"""Graph representation, edge-list I/O, family generators and geodesic measures."""

from __future__ import annotations

from array import array
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import DisconnectedGraphError, GraphFormatError, InvalidParameterError
from .prng import SplitMix64

__all__ = [
    "Graph",
    "DistanceMatrix",
    "FAMILIES",
    "parse_edge_list",
    "format_edge_list",
    "generate_family",
    "all_pairs_distances",
    "wiener_index",
    "geodesic_betweenness",
]


@dataclass(frozen=True, eq=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Use :meth:`from_edges` to build one; it normalises the edge list and,
    unless told otherwise, rejects disconnected input.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    family: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise InvalidParameterError("adjacency length does not match n")
        for u, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InvalidParameterError(f"neighbours of {u} not sorted and unique")
            for v in nbrs:
                if v == u:
                    raise InvalidParameterError(f"self-loop at {u}")
                if u not in self.adjacency[v]:
                    raise InvalidParameterError(f"adjacency not symmetric at ({u}, {v})")

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.n, self.edges))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        *,
        family: str | None = None,
        require_connected: bool = True,
    ) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at {u}")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in canon:
                raise InvalidParameterError(f"duplicate edge ({a}, {b})")
            canon.add((a, b))
            nbrs[a].add(b)
            nbrs[b].add(a)
        g = cls(
            n=n,
            adjacency=tuple(tuple(sorted(s)) for s in nbrs),
            edges=tuple(sorted(canon)),
            family=family,
        )
        if require_connected and not g.is_connected():
            raise DisconnectedGraphError()
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adjacency)

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    @cached_property
    def distance_array(self) -> array:
        """Row-major ``array('i')`` copy of the distance matrix for the kernels."""
        flat = array("i")
        for row in self.distances.dist:
            flat.extend(row)
        return flat

    def components_without(
        self, removed_vertices: Iterable[int] = (), removed_edges: Iterable[tuple[int, int]] = ()
    ) -> list[int]:
        """Sizes of the connected components after deleting vertices and/or edges."""
        gone = set(removed_vertices)
        cut = {(min(e), max(e)) for e in removed_edges}
        seen = set(gone)
        sizes = []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            stack = [s]
            size = 0
            while stack:
                u = stack.pop()
                size += 1
                for v in self.adjacency[u]:
                    if v in seen or (min(u, v), max(u, v)) in cut:
                        continue
                    seen.add(v)
                    stack.append(v)
            sizes.append(size)
        return sizes


@dataclass(frozen=True)
class DistanceMatrix:
    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.dist[u]

    def __len__(self) -> int:
        return len(self.dist)

    def upper_triangle_sum(self) -> int:
        n = len(self.dist)
        return sum(self.dist[u][v] for u in range(n) for v in range(u + 1, n))


# --------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``m`` edge lines format.

    Blank lines and lines starting with ``#`` are ignored.  Every failure
    raises :class:`GraphFormatError` naming the line it happened on.
    """
    header: tuple[int, int] | None = None
    header_line = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("malformed", f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("malformed", f"expected two integers, got {raw!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise GraphFormatError("malformed", f"bad header {raw!r}", lineno)
            header, header_line = (a, b), lineno
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError("edge-count", f"more than the declared {m} edges", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError("out-of-range", f"vertex id outside 0..{n - 1} in {raw!r}", lineno)
        if a == b:
            raise GraphFormatError("self-loop", f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(
                "duplicate-edge", f"edge {key} already given on line {seen[key]}", lineno
            )
        seen[key] = lineno
        edges.append(key)
    if header is None:
        raise GraphFormatError("malformed", "missing 'n m' header line", last_line or 1)
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(
            "edge-count", f"header declares {m} edges but {len(edges)} were given", header_line
        )
    g = Graph.from_edges(n, edges, require_connected=False)
    if not g.is_connected():
        raise DisconnectedGraphError(
            f"graph is not connected (vertex 0 does not reach all {n} vertices)", header_line
        )
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines)


# --------------------------------------------------------------------------
# generators

FAMILIES = (
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "hypercube",
    "grid",
    "random_tree",
    "gnp_connected",
)

DEFAULT_GNP_PERCENT = 50
MAX_GNP_ATTEMPTS = 10_000


def _normalise_family(family: str) -> str:
    name = family.strip().lower().replace("-", "_")
    if name not in FAMILIES:
        raise InvalidParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return name


def _need(family: str, params: Sequence[int], counts: Sequence[int]) -> None:
    if len(params) not in counts:
        want = " or ".join(str(c) for c in counts)
        raise InvalidParameterError(f"{family} takes {want} parameter(s), got {len(params)}")


def _at_least(family: str, value: int, low: int, what: str = "n") -> None:
    if value < low:
        raise InvalidParameterError(f"{family}: {what} must be >= {low}, got {value}")


def generate_family(family: str, params: Sequence[int], seed: int | None = None) -> Graph:
    """Build a member of a named graph family.

    ``random_tree`` ([n]) decodes a Pruefer sequence drawn from a SplitMix64
    stream; ``gnp_connected`` ([n] or [n, percent]) samples G(n, p) with the
    same stream, pairs visited in lexicographic order, and resamples until
    the graph is connected.  A missing seed means seed 0.
    """
    name = _normalise_family(family)
    params = [int(p) for p in params]
    label = name + "(" + ",".join(str(p) for p in params) + ")"

    if name == "path":
        _need(name, params, (1,))
        (n,) = params
        _at_least(name, n, 1)
        edges = [(i, i + 1) for i in range(n - 1)]
    elif name == "cycle":
        _need(name, params, (1,))
        (n,) = params
        _at_least(name, n, 3)
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif name == "star":
        _need(name, params, (1,))
        (n,) = params
        _at_least(name, n, 1)
        edges = [(0, i) for i in range(1, n)]
    elif name == "complete":
        _need(name, params, (1,))
        (n,) = params
        _at_least(name, n, 1)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif name == "complete_bipartite":
        _need(name, params, (2,))
        a, b = params
        _at_least(name, a, 1, "a")
        _at_least(name, b, 1, "b")
        n = a + b
        edges = [(u, a + v) for u in range(a) for v in range(b)]
    elif name == "hypercube":
        _need(name, params, (1,))
        (d,) = params
        _at_least(name, d, 1, "d")
        if d > 20:
            raise InvalidParameterError("hypercube: d must be <= 20")
        n = 1 << d
        edges = [(u, u | (1 << i)) for u in range(n) for i in range(d) if not u & (1 << i)]
    elif name == "grid":
        _need(name, params, (2,))
        r, c = params
        _at_least(name, r, 1, "rows")
        _at_least(name, c, 1, "cols")
        n = r * c
        edges = []
        for i in range(r):
            for j in range(c):
                v = i * c + j
                if j + 1 < c:
                    edges.append((v, v + 1))
                if i + 1 < r:
                    edges.append((v, v + c))
    elif name == "random_tree":
        _need(name, params, (1,))
        (n,) = params
        _at_least(name, n, 1)
        edges = _random_tree_edges(n, SplitMix64(seed or 0))
        label += f"@{seed or 0}"
    else:  # gnp_connected
        _need(name, params, (1, 2))
        n = params[0]
        _at_least(name, n, 1)
        percent = params[1] if len(params) == 2 else DEFAULT_GNP_PERCENT
        if not 1 <= percent <= 100:
            raise InvalidParameterError(f"{name}: percent must be in 1..100, got {percent}")
        edges = _gnp_connected_edges(n, percent, SplitMix64(seed or 0))
        label += f"@{seed or 0}"
    return Graph.from_edges(n, edges, family=label)


def _random_tree_edges(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    pruefer = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in pruefer:
        degree[v] += 1
    edges = []
    for v in pruefer:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return edges


def _gnp_connected_edges(n: int, percent: int, rng: SplitMix64) -> list[tuple[int, int]]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(MAX_GNP_ATTEMPTS):
        edges = [e for e in pairs if rng.below(100) < percent]
        g = Graph.from_edges(n, edges, require_connected=False)
        if g.is_connected():
            return edges
    raise InvalidParameterError(
        f"gnp_connected: no connected sample after {MAX_GNP_ATTEMPTS} attempts (n={n}, p={percent}%)"
    )


# --------------------------------------------------------------------------
# geodesic measures


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        row = _bfs(g, s)
        if min(row) < 0:
            raise DisconnectedGraphError()
        rows.append(tuple(row))
    return DistanceMatrix(tuple(rows))


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs."""
    return g.distances.upper_triangle_sum()


def geodesic_betweenness(g: Graph) -> tuple[Fraction, ...]:
    """Exact betweenness B(v) over unordered pairs {x, y} not containing v.

    Brandes accumulation with Fractions; each unordered pair is visited from
    both ends, hence the final halving.
    """
    n = g.n
    total = [Fraction(0)] * n
    for s in range(n):
        order = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        delta = [Fraction(0)] * n
        for w in reversed(order):
            for u in preds[w]:
                delta[u] += Fraction(sigma[u], sigma[w]) * (1 + delta[w])
            if w != s:
                total[w] += delta[w]
    return tuple(t / 2 for t in total)
