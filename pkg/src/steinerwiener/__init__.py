"""Exact Steiner k-Wiener indices and k-Steiner betweenness centralities."""

from .counting import (
    CentralityReport,
    SteinerTreeCount,
    average_k_steiner_betweenness,
    count_steiner_trees,
    enumerate_min_steiner_trees,
    k_steiner_betweenness,
    spanning_tree_count,
    total_steiner_betweenness,
)
from .errors import (
    CapacityError,
    DisconnectedGraphError,
    GraphFormatError,
    IdentityViolation,
    InvalidParameterError,
    NonModularGraphError,
    NotATreeError,
    SteinerError,
)
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    format_edge_list,
    generate_family,
    geodesic_betweenness,
    parse_edge_list,
    wiener_index,
)
from .kernels import BACKEND
from .modular import (
    ModularityWitness,
    average_b3_modular,
    classify_modularity,
    hypercube_b3,
    sw3_via_wiener,
)
from .steiner import (
    SteinerIndexSummary,
    TerminalSet,
    steiner_distance,
    steiner_distance_bruteforce,
    steiner_wiener_k,
    total_steiner_wiener,
)
from .trees import ForestPartition, n_k, n_k_by_partitions, sw_k_edge_decomposition, sw_k_vertex_decomposition

__version__ = "0.1.0"
