"""Storage engines: adjacency mutation set, CSR construction/immutability,
backend equivalence, and the analytic memory model."""

import numpy as np
import pytest

from edgekit import (
    AdjacencyGraph,
    CapabilityError,
    CsrGraph,
    GraphKind,
    ImmutableGraphError,
    VertexNotFoundError,
    adjacency_footprint_model,
    bytes_per_edge,
    csr_from_edge_list,
    memory_footprint,
)
from edgekit.generators import gnp, gnp_edges
from edgekit.rng import new_rng

from conftest import make_graph


def test_remove_vertex_drops_incident_edges():
    g = make_graph(5, [(0, 1), (0, 2), (0, 3), (2, 3)])
    assert g.remove_vertex(0)
    assert g.edge_count == 1
    assert g.vertex_count == 4
    assert not g.remove_vertex(0)


def test_endpoint_index_agrees_with_linear_scan():
    rng = new_rng(5)
    plain = AdjacencyGraph(GraphKind(allows_self_loops=True, allows_multiple_edges=True))
    indexed = AdjacencyGraph(
        GraphKind(allows_self_loops=True, allows_multiple_edges=True), index_edges=True
    )
    for v in range(15):
        plain.add_vertex(v)
        indexed.add_vertex(v)
    for _ in range(80):
        u, v = int(rng.integers(15)), int(rng.integers(15))
        plain.add_edge(u, v)
        indexed.add_edge(u, v)
    # interleave removals to exercise index maintenance
    for e in list(plain.edges())[::7]:
        plain.remove_edge(e)
    for e in list(indexed.edges())[::7]:
        indexed.remove_edge(e)
    for _ in range(10_000):
        u, v = int(rng.integers(15)), int(rng.integers(15))
        a = plain.get_edge(u, v)
        b = indexed.get_edge(u, v)
        ai = None if a is None else plain.edge_index(a)
        bi = None if b is None else indexed.edge_index(b)
        assert ai == bi


def test_mutation_fuzz_keeps_handshake():
    rng = new_rng(6)
    g = AdjacencyGraph(GraphKind(allows_self_loops=True, allows_multiple_edges=True))
    for v in range(12):
        g.add_vertex(v)
    live = []
    for _ in range(10_000):
        if live and rng.random() < 0.4:
            g.remove_edge(live.pop(int(rng.integers(len(live)))))
        else:
            live.append(g.add_edge(int(rng.integers(12)), int(rng.integers(12))))
        assert sum(g.degree_of(v) for v in g.vertices()) == 2 * g.edge_count


def test_csr_row_pointers_per_incidence():
    g = csr_from_edge_list(3, [(0, 1), (1, 2)])
    assert g.row_pointers.tolist() == [0, 1, 3, 4]
    assert g.degree_of(1) == 2


def test_csr_empty_edge_list():
    g = csr_from_edge_list(5, [])
    assert g.row_pointers.tolist() == [0] * 6
    assert g.edge_count == 0


def test_csr_weight_array_in_input_order():
    g = csr_from_edge_list(3, [(0, 1, 0.5), (1, 2, 2.0)], weighted=True)
    assert [g.edge_weight(j) for j in range(2)] == [0.5, 2.0]


def test_csr_structural_invariants_on_random_inputs():
    for seed in range(15):
        rng = new_rng(seed)
        n = int(rng.integers(1, 20))
        m = int(rng.integers(0, 40))
        directed = bool(rng.integers(2))
        edges = [(int(rng.integers(n)), int(rng.integers(n))) for _ in range(m)]
        g = csr_from_edge_list(n, edges, directed=directed)
        rp = g.row_pointers
        assert rp[0] == 0
        assert np.all(np.diff(rp) >= 0)
        assert rp[-1] == (m if directed else 2 * m)
        assert list(g.vertices()) == list(range(n))
        assert list(g.edges()) == list(range(m))
        assert [g.edge_index(e) for e in g.edges()] == list(range(m))


def test_csr_rejects_out_of_range_endpoint():
    with pytest.raises(VertexNotFoundError):
        csr_from_edge_list(3, [(0, 3)])


def test_csr_mutations_rejected_weight_write_allowed():
    g = csr_from_edge_list(3, [(0, 1, 1.0), (1, 2, 2.0)], weighted=True)
    with pytest.raises(ImmutableGraphError):
        g.add_vertex(3)
    with pytest.raises(ImmutableGraphError):
        g.remove_edge(0)
    with pytest.raises(ImmutableGraphError):
        g.add_edge(0, 2)
    g.set_edge_weight(0, 9.0)
    assert g.edge_weight(0) == 9.0
    unweighted = csr_from_edge_list(3, [(0, 1)])
    with pytest.raises(CapabilityError):
        unweighted.set_edge_weight(0, 2.0)


def test_csr_requires_loop_and_multi_capability():
    with pytest.raises(CapabilityError):
        CsrGraph(2, [(0, 1)], GraphKind())


def test_backend_equivalence_random_lists():
    for seed in range(40):
        rng = new_rng(seed + 300)
        n = int(rng.integers(1, 25))
        m = int(rng.integers(0, 50))
        directed = bool(rng.integers(2))
        weighted = bool(rng.integers(2))
        rows = []
        for _ in range(m):
            u, v = int(rng.integers(n)), int(rng.integers(n))
            rows.append((u, v, float(rng.integers(1, 9))) if weighted else (u, v))
        adj = make_graph(n, rows, directed=directed, weighted=weighted, loops=True, multi=True)
        csr = csr_from_edge_list(n, rows, directed=directed, weighted=weighted)
        refs = list(adj.edges())
        for v in range(n):
            assert adj.degree_of(v) == csr.degree_of(v)
            assert adj.in_degree_of(v) == csr.in_degree_of(v)
            assert adj.out_degree_of(v) == csr.out_degree_of(v)
            assert [adj.edge_index(e) for e in adj.edges_of(v)] == csr.edges_of(v)
            assert adj.neighbors_of(v) == csr.neighbors_of(v)
            for u in range(n):
                a = adj.get_edge(v, u)
                assert (None if a is None else adj.edge_index(a)) == csr.get_edge(v, u)
        for j, e in enumerate(refs):
            assert adj.edge_weight(e) == csr.edge_weight(j)
            assert adj.edge_source(e) == csr.edge_source(j)
            assert adj.edge_target(e) == csr.edge_target(j)


def test_memory_model_matches_function_and_is_deterministic():
    g = gnp(300, 0.1, 9)
    assert memory_footprint(g) == adjacency_footprint_model(
        g.vertex_count, g.edge_count, g.kind
    )
    assert memory_footprint(g) == memory_footprint(gnp(300, 0.1, 9))


def test_empty_graph_has_fixed_base_cost():
    g = AdjacencyGraph(GraphKind())
    assert memory_footprint(g) == adjacency_footprint_model(0, 0, g.kind)


def test_csr_beats_adjacency_on_gnp_1000():
    g = gnp(1000, 0.1, 4)
    rows = [(g.edge_source(e), g.edge_target(e)) for e in g.edges()]
    csr = csr_from_edge_list(1000, rows)
    assert bytes_per_edge(csr) < bytes_per_edge(g)


def test_csr_footprint_counts_actual_arrays():
    g = csr_from_edge_list(4, [(0, 1, 2.0), (2, 3, 1.0)], weighted=True)
    total = 64 + sum(a.nbytes for a in g.arrays().values())
    assert memory_footprint(g) == total


def test_csr_bulk_ndarray_input():
    pairs = gnp_edges(50, 0.2, 3)
    g = csr_from_edge_list(50, pairs)
    assert g.edge_count == len(pairs)
