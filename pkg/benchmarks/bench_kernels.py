"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Prints one row per workload with the best wall time of each backend.
"""

import argparse
import time
from itertools import combinations

from steinerwiener import _pykernels, counting, generate_family, kernels
from steinerwiener.combinatorics import k_subsets_colex, members_mask


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads():
    g12 = generate_family("gnp_connected", [12, 40], seed=3)
    g14 = generate_family("gnp_connected", [14, 30], seed=4)
    q4 = generate_family("hypercube", [4])

    def dp(impl, g, k):
        dist, n = g.distance_array, g.n
        return lambda: [impl.steiner_dp(dist, n, list(a)) for a in k_subsets_colex(n, k)]

    def table(impl, g):
        adj = list(g.adjacency_masks)
        return lambda: impl.min_connected_superset_sizes(adj, g.n)

    def supersets(impl, g, k, extra):
        adj = list(g.adjacency_masks)

        def run():
            for a in combinations(range(g.n), k):
                outside = [v for v in range(g.n) if v not in a]
                impl.connected_supersets(adj, members_mask(a), outside, extra)

        return run

    def betweenness(impl, g, k):
        def run():
            kernels._impl = impl
            counting.clear_cache()
            try:
                counting.k_steiner_betweenness(g, k)
            finally:
                kernels._impl = kernels.compiled_backend or _pykernels

        return run

    yield "steiner_dp, all 6-subsets of gnp(12)", lambda impl: dp(impl, g12, 6)
    yield "steiner_dp, all 4-subsets of Q_4", lambda impl: dp(impl, q4, 4)
    yield "superset table, gnp(14)", lambda impl: table(impl, g14)
    yield "connected supersets, gnp(12) k=3 +3", lambda impl: supersets(impl, g12, 3, 3)
    yield "B_4 end to end, gnp(12)", lambda impl: betweenness(impl, g12, 4)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _pykernels)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled kernels unavailable; timing the Python fallback only")
    header = f"{'workload':40s}" + "".join(f"{name:>12s}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for label, make in workloads():
        times = [best_of(make(impl), args.repeat) for _, impl in backends]
        row = f"{label:40s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
