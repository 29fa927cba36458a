"""edgekit: a generic graph library with pluggable storage backends.

Two storage engines sit behind one graph interface: a mutable
insertion-ordered adjacency store and an immutable CSR store for
write-once/read-many workloads.  On top of them: lazy views, classic and
advanced graph algorithms (shortest paths, spanning trees, matchings,
flows and cuts, centrality, cycles, LCA, and an NP-hard toolkit), random
graph generators, interchange formats, and a benchmark harness with a
``bench`` command line.

Every operation is deterministic: identical construction sequences and
seeds reproduce identical results.
"""

from .adjacency import AdjacencyGraph
from .centrality import ScoreMap, betweenness, closeness, coreness, harmonic, pagerank
from .cliques import clique_number, degeneracy_ordering, maximal_cliques
from .coloring import Coloring, color, is_proper
from .core import (
    AddVertexResult,
    Graph,
    GraphBuilderSpec,
    GraphKind,
    build_graph,
)
from .cover import is_vertex_cover, vertex_cover
from .csr import CsrGraph, csr_copy_of, csr_from_edge_list
from .cycles import CycleBasis, cycle_basis, enumerate_simple_cycles
from .errors import (
    CapabilityError,
    EdgeNotFoundError,
    GraphError,
    GraphKindError,
    ImmutableGraphError,
    NegativeCycleError,
    NegativeWeightError,
    NotBipartiteError,
    NotEulerianError,
    ParseError,
    VertexNotFoundError,
)
from .flow import (
    CutResult,
    FlowResult,
    GomoryHuTree,
    gomory_hu,
    max_flow,
    min_st_cut,
    stoer_wagner_min_cut,
)
from .heaps import DAryHeap
from .isomorphism import RefinementVerdict, are_isomorphic, color_refinement, vf2, vf2_mappings
from .lca import (
    LcaIndex,
    dag_deepest_common_ancestors,
    lca_batch_tarjan,
    lca_preprocess,
    lca_query,
)
from .matching import (
    MatchingResult,
    approx_matching,
    edmonds_max_cardinality,
    hopcroft_karp,
    hungarian_min_weight_perfect,
    solve_assignment,
)
from .memory import adjacency_footprint_model, bytes_per_edge, memory_footprint
from .shortest_paths import (
    DistanceMatrix,
    GraphMeasures,
    PathResult,
    SsspTree,
    astar,
    bellman_ford,
    bidirectional_dijkstra,
    dijkstra,
    floyd_warshall,
    graph_measures,
    johnson_apsp,
    yen_k_shortest,
)
from .spanning import SpanningForest, UnionFind, boruvka, kruskal, mst, prim
from .tours import Tour, eulerian_circuit, tsp, tsp_held_karp, tsp_mst_approx, tsp_two_opt
from .traversal import (
    BipartiteResult,
    BlockDecomposition,
    ChordalityResult,
    ComponentLabeling,
    bfs_order,
    biconnectivity,
    chordality,
    connected_components,
    dfs_order,
    is_bipartite,
    strong_components,
)
from .views import as_subgraph, as_undirected, as_unmodifiable, as_weighted, materialize

__version__ = "0.1.0"

__all__ = [
    "AddVertexResult",
    "AdjacencyGraph",
    "BipartiteResult",
    "BlockDecomposition",
    "CapabilityError",
    "ChordalityResult",
    "Coloring",
    "ComponentLabeling",
    "CsrGraph",
    "CutResult",
    "CycleBasis",
    "DAryHeap",
    "DistanceMatrix",
    "EdgeNotFoundError",
    "FlowResult",
    "GomoryHuTree",
    "Graph",
    "GraphBuilderSpec",
    "GraphError",
    "GraphKind",
    "GraphKindError",
    "GraphMeasures",
    "ImmutableGraphError",
    "LcaIndex",
    "MatchingResult",
    "NegativeCycleError",
    "NegativeWeightError",
    "NotBipartiteError",
    "NotEulerianError",
    "ParseError",
    "PathResult",
    "RefinementVerdict",
    "ScoreMap",
    "SpanningForest",
    "SsspTree",
    "Tour",
    "UnionFind",
    "VertexNotFoundError",
    "adjacency_footprint_model",
    "approx_matching",
    "are_isomorphic",
    "as_subgraph",
    "as_undirected",
    "as_unmodifiable",
    "as_weighted",
    "astar",
    "bellman_ford",
    "betweenness",
    "bfs_order",
    "biconnectivity",
    "bidirectional_dijkstra",
    "boruvka",
    "build_graph",
    "bytes_per_edge",
    "chordality",
    "clique_number",
    "closeness",
    "color",
    "color_refinement",
    "connected_components",
    "coreness",
    "csr_copy_of",
    "csr_from_edge_list",
    "cycle_basis",
    "dag_deepest_common_ancestors",
    "degeneracy_ordering",
    "dfs_order",
    "dijkstra",
    "edmonds_max_cardinality",
    "enumerate_simple_cycles",
    "eulerian_circuit",
    "floyd_warshall",
    "gomory_hu",
    "graph_measures",
    "harmonic",
    "hopcroft_karp",
    "hungarian_min_weight_perfect",
    "is_bipartite",
    "is_proper",
    "is_vertex_cover",
    "johnson_apsp",
    "kruskal",
    "lca_batch_tarjan",
    "lca_preprocess",
    "lca_query",
    "materialize",
    "max_flow",
    "maximal_cliques",
    "memory_footprint",
    "min_st_cut",
    "mst",
    "pagerank",
    "prim",
    "solve_assignment",
    "stoer_wagner_min_cut",
    "strong_components",
    "tsp",
    "tsp_held_karp",
    "tsp_mst_approx",
    "tsp_two_opt",
    "vertex_cover",
    "vf2",
    "vf2_mappings",
    "yen_k_shortest",
]
