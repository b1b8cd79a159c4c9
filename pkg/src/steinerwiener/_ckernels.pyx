# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in _pykernels.py (same signatures and results)."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef int INF = 1 << 30


def steiner_dp(const int[:] dist, int n, terminals):
    cdef int k = len(terminals)
    if k <= 1:
        return 0
    if k == 2:
        return dist[<int>terminals[0] * n + <int>terminals[1]]
    cdef int q = k - 1
    cdef long full = (1L << q) - 1
    cdef int *dp = <int *> malloc((full + 1) * n * sizeof(int))
    cdef int *split = <int *> malloc(n * sizeof(int))
    if dp == NULL or split == NULL:
        free(dp)
        free(split)
        raise MemoryError()
    cdef int i, u, v, t, s, su
    cdef long mask, low, rest, sub, bm
    cdef int *a
    cdef int *b
    cdef int *cur
    cdef int result
    try:
        for i in range(q):
            t = terminals[i]
            for v in range(n):
                dp[(1L << i) * n + v] = dist[t * n + v]
        for mask in range(3, full + 1):
            if mask & (mask - 1) == 0:
                continue
            low = mask & -mask
            rest = mask ^ low
            for v in range(n):
                split[v] = INF
            sub = rest
            while True:
                bm = rest ^ sub
                if bm:
                    a = dp + (sub | low) * n
                    b = dp + bm * n
                    for v in range(n):
                        s = a[v] + b[v]
                        if s < split[v]:
                            split[v] = s
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            cur = dp + mask * n
            for v in range(n):
                cur[v] = split[v]
            for u in range(n):
                su = split[u]
                if su >= INF:
                    continue
                for v in range(n):
                    s = su + dist[u * n + v]
                    if s < cur[v]:
                        cur[v] = s
        t = terminals[k - 1]
        result = dp[full * n + t]
    finally:
        free(dp)
        free(split)
    return result


cdef inline bint _connected(const u64 *adj, u64 mask) noexcept nogil:
    if mask == 0:
        return True
    cdef u64 reach = mask & (~mask + 1)
    cdef u64 frontier = reach
    cdef u64 bit, new
    cdef int v
    while frontier:
        bit = frontier & (~frontier + 1)
        frontier ^= bit
        v = __builtin_ctzll(bit)
        new = adj[v] & mask & ~reach
        reach |= new
        frontier |= new
    return reach == mask


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef u64 *_adj_buffer(adj) except NULL:
    cdef int n = len(adj)
    cdef u64 *buf = <u64 *> malloc((n if n > 0 else 1) * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        buf[i] = <u64> adj[i]
    return buf


def is_connected_mask(adj, mask):
    cdef u64 *buf = _adj_buffer(adj)
    try:
        return _connected(buf, <u64> mask)
    finally:
        free(buf)


def connected_supersets(adj, base_mask, candidates, int extra):
    cdef int c = len(candidates)
    cdef u64 *buf = _adj_buffer(adj)
    cdef int *idx = <int *> malloc((extra + 1) * sizeof(int))
    cdef u64 *cand = <u64 *> malloc((c + 1) * sizeof(u64))
    cdef u64 base = <u64> base_mask
    cdef u64 mask
    cdef int i, j
    out = []
    try:
        if idx == NULL or cand == NULL:
            raise MemoryError()
        if extra < 0 or extra > c:
            return out
        for i in range(c):
            cand[i] = (<u64> 1) << <int> candidates[i]
        for i in range(extra):
            idx[i] = i
        while True:
            mask = base
            for i in range(extra):
                mask |= cand[idx[i]]
            if _connected(buf, mask):
                out.append(mask)
            # next combination in lexicographic order
            i = extra - 1
            while i >= 0 and idx[i] == c - extra + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, extra):
                idx[j] = idx[j - 1] + 1
    finally:
        free(buf)
        free(idx)
        free(cand)
    return out


def min_connected_superset_sizes(adj, int n):
    cdef u64 size = (<u64> 1) << n
    cdef u64 *buf = _adj_buffer(adj)
    cdef int *table = <int *> malloc(size * sizeof(int))
    cdef u64 mask, bit
    cdef int i
    try:
        if table == NULL:
            raise MemoryError()
        with nogil:
            for mask in range(size):
                table[mask] = __builtin_popcountll(mask) if _connected(buf, mask) else INF
            for i in range(n):
                bit = (<u64> 1) << i
                for mask in range(size):
                    if not mask & bit and table[mask | bit] < table[mask]:
                        table[mask] = table[mask | bit]
        return [table[mask] for mask in range(size)]
    finally:
        free(buf)
        free(table)
