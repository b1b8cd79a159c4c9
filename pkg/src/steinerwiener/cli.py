"""Command-line interface: ``compute``, ``verify`` and ``generate``.

Exit codes: 0 success, 1 an identity failed, 2 bad input, 3 capacity guard.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import ExitStack
from fractions import Fraction

from .combinatorics import binom
from .counting import (
    TOTAL_BETWEENNESS_MAX_N,
    average_k_steiner_betweenness_sides,
    average_total_steiner_betweenness_sides,
    k_steiner_betweenness,
    total_steiner_betweenness,
)
from .errors import CapacityError, GraphFormatError, IdentityViolation, InvalidParameterError
from .graph import Graph, format_edge_list, generate_family, geodesic_betweenness, parse_edge_list, wiener_index
from .modular import (
    average_b3_modular,
    classify_modularity,
    hypercube_b3,
    hypercube_wiener,
    is_bipartite,
    sw3_formula_value,
    sw3_via_wiener,
)
from .report import Report, exact, exact_vector
from .steiner import steiner_wiener_k, total_steiner_wiener
from .trees import (
    edge_terms,
    n_k,
    n_k_by_partitions,
    sw_k_edge_decomposition,
    sw_k_vertex_decomposition,
    vertex_terms,
    wiener_by_edge_cuts,
)

EXIT_OK, EXIT_IDENTITY, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

METRICS = (
    "wiener",
    "betweenness",
    "steiner-wiener",
    "steiner-betweenness",
    "total-steiner-wiener",
    "total-steiner-betweenness",
    "modularity",
    "tree-decompositions",
)
SUITES = ("tree", "general", "modular", "total", "all")
DEFAULT_MAX_K = 4

THM_TREE_EDGE = "edge decomposition of SW_k for trees"
THM_TREE_VERTEX = "vertex decomposition of SW_k for trees"
THM_WIENER_TREE = "Wiener edge-cut formula for trees"
THM_GENERAL = "vertex decomposition of SW_k via k-Steiner betweenness"
THM_AVERAGE = "average k-Steiner betweenness corollary"
THM_MODULAR = "SW_3 of modular graphs via the Wiener index"
THM_AVERAGE_B3 = "average 3-Steiner betweenness of modular graphs"
THM_HYPERCUBE = "hypercube closed forms"
THM_TOTAL = "total Steiner Wiener index via total Steiner betweenness"
THM_TOTAL_AVERAGE = "average total Steiner betweenness corollary"
THM_NK = "N_k partition sum equals inclusion-exclusion"
THM_DEFINITION = "definitional consistency"


# --------------------------------------------------------------------------
# argument parsing


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="edge-list file ('-' for stdin)")
    src.add_argument("--family", help="generated family, e.g. path, hypercube, random-tree")
    p.add_argument("--params", type=int, nargs="+", default=[], help="family parameters")
    p.add_argument("--seed", type=int, default=None, help="seed for random families")


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker processes (default: machine parallelism); output is identical for any value",
    )
    p.add_argument("--timings", action="store_true", help="add per-metric wall times to the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinerwiener",
        description="Exact Steiner Wiener indices, Steiner betweenness and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute metrics and print a JSON report")
    _add_source(p)
    p.add_argument("--metric", action="append", choices=METRICS, required=True, help="repeatable")
    p.add_argument("-k", type=int, default=None, help="subset size for k-indexed metrics")
    p.add_argument("--force", action="store_true", help="modularity: report both SW_3 sides even if not modular")
    _add_run_options(p)

    p = sub.add_parser("verify", help="check the decomposition identities, exit 1 on any failure")
    _add_source(p)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("-k", type=int, nargs="+", default=None, metavar="K", help="k range: KMIN [KMAX]")
    _add_run_options(p)

    p = sub.add_parser("generate", help="print a family member in edge-list format")
    p.add_argument("--family", required=True)
    p.add_argument("--params", type=int, nargs="+", default=[])
    p.add_argument("--seed", type=int, default=None)
    return parser


def load_graph(args) -> Graph:
    if args.file is not None:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InvalidParameterError(f"cannot read {args.file}: {exc}") from None
        return parse_edge_list(text)
    return generate_family(args.family, args.params, args.seed)


def _family_params(args) -> tuple[str | None, list[int]]:
    if getattr(args, "family", None) is None:
        return None, []
    return args.family.strip().lower().replace("-", "_"), list(args.params)


# --------------------------------------------------------------------------
# compute


def _need_k(args, g: Graph, metric: str) -> int:
    if args.k is None:
        raise InvalidParameterError(f"metric {metric} needs -k")
    if not 2 <= args.k <= g.n:
        raise InvalidParameterError(f"k must satisfy 2 <= k <= n={g.n}, got {args.k}")
    return args.k


def _centrality_json(report) -> dict:
    return {
        "k": report.k,
        "per_vertex": exact_vector(report.per_vertex),
        "sum": exact(report.sum),
        "average": exact(report.average),
        "identity_residual": exact(report.identity_residual),
    }


def run_compute(args, g: Graph, executor: Executor | None, workers: int) -> Report:
    rep = Report("compute", g, timings=args.timings)
    n = g.n
    for metric in dict.fromkeys(args.metric):
        with rep.timed(metric):
            if metric == "wiener":
                rep.metric(metric, {"value": exact(wiener_index(g))})
            elif metric == "betweenness":
                values = geodesic_betweenness(g)
                rep.metric(metric, {"per_vertex": exact_vector(values), "sum": exact(sum(values, Fraction(0)))})
            elif metric == "steiner-wiener":
                s = steiner_wiener_k(g, _need_k(args, g, metric))
                rep.metric(metric, {"k": s.k, "value": exact(s.value), "average": exact(s.average)})
            elif metric == "steiner-betweenness":
                k = _need_k(args, g, metric)
                r = k_steiner_betweenness(g, k, executor=executor, workers=workers)
                rep.metric(metric, _centrality_json(r))
                rep.identity(f"vertex-decomposition[k={k}]", THM_GENERAL, r.identity_residual, 0)
            elif metric == "total-steiner-wiener":
                s = total_steiner_wiener(g)
                rep.metric(metric, {"value": exact(s.value), "average": exact(s.average)})
            elif metric == "total-steiner-betweenness":
                r = total_steiner_betweenness(g, executor=executor, workers=workers)
                rep.metric(metric, _centrality_json(r))
                rep.identity("total-vertex-decomposition", THM_TOTAL, r.identity_residual, 0)
            elif metric == "modularity":
                w = classify_modularity(g)
                out = {
                    "is_modular": w.is_modular,
                    "is_median": w.is_median,
                    "violating_triple": list(w.violating_triple) if w.violating_triple else None,
                    "ambiguous_triple": list(w.ambiguous_triple) if w.ambiguous_triple else None,
                }
                if w.is_modular and n >= 3:
                    out["sw3_via_wiener"] = exact(sw3_via_wiener(g))
                    out["average_b3"] = exact(average_b3_modular(g, cross_check=False))
                if args.force and n >= 3:
                    direct = steiner_wiener_k(g, 3).value
                    formula = sw3_formula_value(g)
                    out["sw3_direct"] = exact(direct)
                    out["sw3_formula"] = exact(formula)
                    rep.diagnostic("sw3-direct-vs-wiener-formula", direct, formula)
                rep.metric(metric, out)
            elif metric == "tree-decompositions":
                k = _need_k(args, g, metric)
                rep.metric(
                    metric,
                    {
                        "k": k,
                        "edge_decomposition": exact(sw_k_edge_decomposition(g, k)),
                        "vertex_decomposition": exact(sw_k_vertex_decomposition(g, k)),
                        "edge_terms": {f"{u}-{v}": exact(t) for (u, v), t in edge_terms(g, k).items()},
                        "vertex_terms": exact_vector(vertex_terms(g, k)),
                    },
                )
    return rep


# --------------------------------------------------------------------------
# verify


def _k_range(args, g: Graph) -> tuple[int, int]:
    if args.k is None:
        lo, hi = 2, min(g.n, DEFAULT_MAX_K)
    elif len(args.k) == 1:
        lo = hi = args.k[0]
    elif len(args.k) == 2:
        lo, hi = args.k
    else:
        raise InvalidParameterError("-k takes KMIN [KMAX]")
    if lo < 2 or hi < lo:
        raise InvalidParameterError(f"bad k range {lo}..{hi}")
    return lo, min(hi, g.n)


def _verify_tree(rep: Report, g: Graph, ks: range, executor, workers) -> None:
    with rep.timed("tree"):
        rep.identity("wiener-edge-cuts", THM_WIENER_TREE, wiener_by_edge_cuts(g), wiener_index(g))
        for k in ks:
            sw = steiner_wiener_k(g, k).value
            rep.identity(f"tree-edge-decomposition[k={k}]", THM_TREE_EDGE, sw_k_edge_decomposition(g, k), sw)
            rep.identity(f"tree-vertex-decomposition[k={k}]", THM_TREE_VERTEX, sw_k_vertex_decomposition(g, k), sw)
            terms = vertex_terms(g, k)
            b = k_steiner_betweenness(g, k, executor=executor, workers=workers).per_vertex
            rep.identity(f"tree-vertex-terms-are-betweenness[k={k}]", THM_TREE_VERTEX, list(terms), list(b))
            literal = [n_k_by_partitions(g.components_without(removed_vertices=[v]), k) for v in range(g.n)]
            closed = [n_k(g.components_without(removed_vertices=[v]), k) for v in range(g.n)]
            rep.identity(f"n-k-forms-agree[k={k}]", THM_NK, literal, closed)


def _verify_general(rep: Report, g: Graph, ks: range, executor, workers) -> None:
    n = g.n
    with rep.timed("general"):
        for k in ks:
            r = k_steiner_betweenness(g, k, executor=executor, workers=workers)
            sw = steiner_wiener_k(g, k).value
            rep.identity(f"vertex-decomposition[k={k}]", THM_GENERAL, r.sum + (k - 1) * binom(n, k), sw)
            lhs, rhs = average_k_steiner_betweenness_sides(g, k, executor=executor, workers=workers)
            rep.identity(f"average-betweenness[k={k}]", THM_AVERAGE, lhs, rhs)
            if k == 2:
                w = wiener_index(g)
                b = geodesic_betweenness(g)
                rep.identity("sw2-equals-wiener", THM_DEFINITION, sw, w)
                rep.identity("b2-equals-geodesic-betweenness", THM_DEFINITION, list(r.per_vertex), list(b))
                rep.identity("betweenness-sum", THM_GENERAL, sum(b, Fraction(0)), w - binom(n, 2))


def _hypercube_dimension(g: Graph, family: str | None, params: list[int]) -> int | None:
    if family == "hypercube" and len(params) == 1:
        return params[0]
    return None


def _verify_modular(rep: Report, g: Graph, family, params, executor, workers) -> None:
    n = g.n
    with rep.timed("modular"):
        w = classify_modularity(g)
        rep.metric(
            "modularity",
            {
                "is_modular": w.is_modular,
                "is_median": w.is_median,
                "violating_triple": list(w.violating_triple) if w.violating_triple else None,
                "ambiguous_triple": list(w.ambiguous_triple) if w.ambiguous_triple else None,
                "is_bipartite": is_bipartite(g),
            },
        )
        if n < 3:
            rep.skip("modular", "fewer than three vertices")
            return
        direct = steiner_wiener_k(g, 3).value
        if not w.is_modular:
            rep.diagnostic(
                "sw3-vs-wiener-formula",
                direct,
                sw3_formula_value(g),
                note="graph is not modular; the formula is not expected to hold",
            )
            return
        rep.identity("modular-implies-bipartite", THM_MODULAR, int(is_bipartite(g)), 1)
        rep.identity("sw3-modular", THM_MODULAR, direct, sw3_via_wiener(g))
        counted = k_steiner_betweenness(g, 3, executor=executor, workers=workers)
        rep.identity("average-b3-modular", THM_AVERAGE_B3, counted.average, average_b3_modular(g, cross_check=False))
        d = _hypercube_dimension(g, family, params)
        if d is not None:
            rep.identity("hypercube-wiener", THM_HYPERCUBE, wiener_index(g), hypercube_wiener(d))
            closed = hypercube_b3(d)
            rep.identity("hypercube-b3-per-vertex", THM_HYPERCUBE, list(counted.per_vertex), [closed] * n)


def _verify_total(rep: Report, g: Graph, executor, workers) -> None:
    n = g.n
    with rep.timed("total"):
        r = total_steiner_betweenness(g, executor=executor, workers=workers)
        sw = total_steiner_wiener(g).value
        rep.identity("total-vertex-decomposition", THM_TOTAL, r.sum + 2 ** (n - 1) * (n - 2) + 1, sw)
        per_k = sum(steiner_wiener_k(g, k).value for k in range(2, n + 1))
        rep.identity("total-equals-sum-over-k", THM_DEFINITION, sw, per_k)
        lhs, rhs = average_total_steiner_betweenness_sides(g, executor=executor, workers=workers)
        rep.identity("total-average-betweenness", THM_TOTAL_AVERAGE, lhs, rhs)


def run_verify(args, g: Graph, executor: Executor | None, workers: int) -> Report:
    rep = Report("verify", g, timings=args.timings)
    lo, hi = _k_range(args, g)
    rep["suite"] = args.suite
    rep["k_range"] = [lo, hi]
    ks = range(lo, hi + 1)
    family, params = _family_params(args)
    suites = ("tree", "general", "modular", "total") if args.suite == "all" else (args.suite,)
    for suite in suites:
        if suite == "tree":
            if not g.is_tree():
                if args.suite == "tree":
                    raise InvalidParameterError("tree suite needs a tree input")
                rep.skip("tree", "graph is not a tree")
                continue
            _verify_tree(rep, g, ks, executor, workers)
        elif suite == "general":
            _verify_general(rep, g, ks, executor, workers)
        elif suite == "modular":
            _verify_modular(rep, g, family, params, executor, workers)
        elif suite == "total":
            if g.n > TOTAL_BETWEENNESS_MAX_N and args.suite == "all":
                rep.skip("total", f"n={g.n} exceeds the total-betweenness cap {TOTAL_BETWEENNESS_MAX_N}")
                continue
            _verify_total(rep, g, executor, workers)
    rep["passed"] = rep.all_passed
    return rep


# --------------------------------------------------------------------------


def _workers(requested: int | None) -> int:
    if requested is None:
        return os.cpu_count() or 1
    if requested < 1:
        raise InvalidParameterError("--threads must be >= 1")
    return requested


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            g = generate_family(args.family, args.params, args.seed)
            print(format_edge_list(g))
            return EXIT_OK
        g = load_graph(args)
        workers = _workers(args.threads)
        with ExitStack() as stack:
            executor = stack.enter_context(ProcessPoolExecutor(workers)) if workers > 1 else None
            if args.command == "compute":
                rep = run_compute(args, g, executor, workers)
            else:
                rep = run_verify(args, g, executor, workers)
    except (GraphFormatError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except IdentityViolation as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    print(rep.to_json())
    return EXIT_OK if rep.all_passed else EXIT_IDENTITY


if __name__ == "__main__":
    sys.exit(main())
