"""Graph interface contracts: capabilities, degrees, lookups, builder."""

import pytest

from edgekit import (
    CapabilityError,
    GraphBuilderSpec,
    GraphKind,
    VertexNotFoundError,
    build_graph,
)
from edgekit.rng import new_rng

from conftest import make_graph


def test_add_vertex_base_case():
    g = build_graph()
    ref, added = g.add_vertex("v0")
    assert added and ref == "v0"
    assert g.vertex_count == 1


def test_duplicate_add_vertex_flags_and_keeps_count():
    g = build_graph()
    assert g.add_vertex("v0").added
    again = g.add_vertex("v0")
    assert not again.added
    assert again.ref == "v0"
    assert g.vertex_count == 1


def test_vertices_iterate_in_insertion_order():
    g = build_graph()
    log = []
    for i in range(100):
        g.add_vertex(f"v{i}")
        log.append(f"v{i}")
    assert list(g.vertices()) == log


def test_simple_graph_rejects_parallel_edge():
    g = make_graph(2, [(0, 1)])
    with pytest.raises(CapabilityError):
        g.add_edge(0, 1)


def test_pseudograph_accepts_self_loop():
    g = make_graph(1, [], loops=True, multi=True)
    e = g.add_edge(0, 0)
    assert g.edge_source(e) == g.edge_target(e) == 0


def test_multigraph_parallel_edges_are_distinct():
    g = make_graph(2, [], multi=True)
    e1 = g.add_edge(0, 1)
    e2 = g.add_edge(0, 1)
    assert e1 is not e2
    assert g.edge_count == 2


def test_missing_endpoint_distinguishable_from_capability_error():
    g = make_graph(2, [(0, 1)])
    with pytest.raises(VertexNotFoundError):
        g.add_edge(0, 7)
    with pytest.raises(CapabilityError):
        g.add_edge(1, 1)


def test_undirected_loop_counts_twice():
    g = make_graph(1, [], loops=True, multi=True)
    g.add_edge(0, 0)
    assert g.degree_of(0) == 2


def test_isolated_vertex_degree_zero():
    g = make_graph(1, [])
    assert g.degree_of(0) == 0


def test_directed_two_cycle_degrees():
    g = make_graph(2, [(0, 1), (1, 0)], directed=True)
    assert g.in_degree_of(0) == 1
    assert g.out_degree_of(0) == 1
    assert g.degree_of(0) == 2


def test_get_edge_symmetric_on_undirected():
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.get_edge(0, 1) is g.get_edge(1, 0)


def test_get_edge_absent_returns_none():
    g = make_graph(3, [(0, 1)])
    assert g.get_edge(1, 2) is None


def test_multigraph_get_edge_prefers_first_inserted():
    g = make_graph(2, [], multi=True)
    first = g.add_edge(0, 1)
    g.add_edge(0, 1)
    g.add_edge(1, 0)
    assert g.get_edge(0, 1) is first
    assert g.get_edge(1, 0) is first


def test_weight_set_get():
    g = make_graph(2, [(0, 1, 1.0)], weighted=True)
    e = g.get_edge(0, 1)
    g.set_edge_weight(e, 2.5)
    assert g.edge_weight(e) == 2.5


def test_unweighted_reads_one_rejects_writes():
    g = make_graph(2, [(0, 1)])
    e = g.get_edge(0, 1)
    assert g.edge_weight(e) == 1.0
    with pytest.raises(CapabilityError):
        g.set_edge_weight(e, 2.0)


@pytest.mark.parametrize(
    "spec",
    [
        GraphBuilderSpec(directed=True, multi_edges=True),
        GraphBuilderSpec(),
        GraphBuilderSpec(weighted=True, self_loops=True, multi_edges=True),
    ],
)
def test_builder_kind_matches_spec_exactly(spec):
    g = build_graph(spec)
    assert g.kind == GraphKind(
        directed=spec.directed,
        allows_self_loops=spec.self_loops,
        allows_multiple_edges=spec.multi_edges,
        weighted=spec.weighted,
    )


def test_capability_soundness_fuzz():
    """No op sequence ever produces a forbidden loop or parallel edge."""
    for seed in range(20):
        rng = new_rng(seed)
        kind = GraphKind(
            directed=bool(rng.integers(2)),
            allows_self_loops=bool(rng.integers(2)),
            allows_multiple_edges=bool(rng.integers(2)),
        )
        g = make_graph(
            6,
            [],
            directed=kind.directed,
            loops=kind.allows_self_loops,
            multi=kind.allows_multiple_edges,
        )
        for _ in range(50):
            op = rng.integers(3)
            u, v = int(rng.integers(6)), int(rng.integers(6))
            try:
                if op == 0:
                    g.add_edge(u, v)
                elif op == 1:
                    e = g.get_edge(u, v)
                    if e is not None:
                        g.remove_edge(e)
                else:
                    g.add_vertex(int(rng.integers(6, 9)))
            except CapabilityError:
                pass
        pairs = {}
        for e in g.edges():
            a, b = g.edge_source(e), g.edge_target(e)
            if not kind.allows_self_loops:
                assert a != b
            key = (a, b) if kind.directed else frozenset((a, b))
            if not kind.allows_multiple_edges:
                assert key not in pairs
            pairs[key] = None


def test_identical_op_sequences_identical_iteration():
    def build():
        g = build_graph(multi_edges=True)
        for v in (3, 1, 4, 1, 5, 9, 2, 6):
            g.add_vertex(v)
        for u, v in ((3, 1), (4, 5), (9, 2), (3, 1)):
            g.add_edge(u, v)
        g.remove_vertex(4)
        return g

    a, b = build(), build()
    assert list(a.vertices()) == list(b.vertices())
    assert [a.edge_index(e) for e in a.edges()] == [b.edge_index(e) for e in b.edges()]
    assert [
        (a.edge_source(e), a.edge_target(e)) for e in a.edges()
    ] == [(b.edge_source(e), b.edge_target(e)) for e in b.edges()]


def test_handshake_sum_of_degrees():
    for seed in range(10):
        rng = new_rng(seed + 100)
        g = make_graph(8, [], loops=True, multi=True)
        for _ in range(25):
            g.add_edge(int(rng.integers(8)), int(rng.integers(8)))
        assert sum(g.degree_of(v) for v in g.vertices()) == 2 * g.edge_count
