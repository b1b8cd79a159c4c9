"""Pure-Python kernels; reference behaviour for the compiled twins in _ckernels.pyx."""

from __future__ import annotations

from itertools import combinations

INF = 1 << 30


def steiner_dp(dist, n, terminals):
    """Dreyfus-Wagner over the metric closure (unit edge weights).

    The last terminal serves as root; masks range over the other k-1.
    ``dist`` is the row-major n*n distance array.
    """
    k = len(terminals)
    if k <= 1:
        return 0
    if k == 2:
        return dist[terminals[0] * n + terminals[1]]
    q = k - 1
    full = (1 << q) - 1
    dp = [None] * (full + 1)
    for i in range(q):
        base = terminals[i] * n
        dp[1 << i] = list(dist[base:base + n])
    rows = [dist[u * n:(u + 1) * n] for u in range(n)]
    for mask in range(3, full + 1):
        if mask & (mask - 1) == 0:
            continue
        low = mask & -mask
        rest = mask ^ low
        split = [INF] * n
        # submasks containing the lowest bit; each split seen once
        sub = rest
        while True:
            a = dp[sub | low]
            b_mask = rest ^ sub
            if b_mask:
                b = dp[b_mask]
                for v in range(n):
                    s = a[v] + b[v]
                    if s < split[v]:
                        split[v] = s
            if sub == 0:
                break
            sub = (sub - 1) & rest
        cur = list(split)
        for u in range(n):
            su = split[u]
            if su >= INF:
                continue
            row = rows[u]
            for v in range(n):
                s = su + row[v]
                if s < cur[v]:
                    cur[v] = s
        dp[mask] = cur
    return dp[full][terminals[-1]]


def is_connected_mask(adj, mask):
    if mask == 0:
        return True
    reach = mask & -mask
    frontier = reach
    while frontier:
        bit = frontier & -frontier
        frontier ^= bit
        new = adj[bit.bit_length() - 1] & mask & ~reach
        reach |= new
        frontier |= new
    return reach == mask


def connected_supersets(adj, base_mask, candidates, extra):
    """Masks ``base | X`` with X an ``extra``-subset of candidates, G[mask] connected."""
    out = []
    for pick in combinations(candidates, extra):
        mask = base_mask
        for v in pick:
            mask |= 1 << v
        if is_connected_mask(adj, mask):
            out.append(mask)
    return out


def min_connected_superset_sizes(adj, n):
    """For every vertex mask S, the fewest vertices of a connected W containing S."""
    size = 1 << n
    table = [INF] * size
    for mask in range(size):
        if is_connected_mask(adj, mask):
            table[mask] = bin(mask).count("1")
    for i in range(n):
        bit = 1 << i
        for mask in range(size):
            if not mask & bit:
                other = table[mask | bit]
                if other < table[mask]:
                    table[mask] = other
    return table
