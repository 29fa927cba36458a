"""View delegation semantics and view/materialization equivalence."""

import pytest

from edgekit import (
    ImmutableGraphError,
    as_subgraph,
    as_undirected,
    as_unmodifiable,
    as_weighted,
    connected_components,
    dijkstra,
    materialize,
)
from edgekit.generators import complete_graph, gnp, with_uniform_integer_weights
from edgekit.rng import new_rng

from conftest import make_graph, random_simple_graph


def queries_agree(a, b):
    assert sorted(a.vertices()) == sorted(b.vertices())
    assert a.vertex_count == b.vertex_count
    assert a.edge_count == b.edge_count
    for v in a.vertices():
        assert a.degree_of(v) == b.degree_of(v)
        assert sorted(
            (a.edge_source(e), a.edge_target(e)) for e in a.edges_of(v)
        ) == sorted((b.edge_source(e), b.edge_target(e)) for e in b.edges_of(v))
        for u in a.vertices():
            ea, eb = a.get_edge(v, u), b.get_edge(v, u)
            assert (ea is None) == (eb is None)
            if ea is not None:
                assert a.edge_weight(ea) == b.edge_weight(eb)


def test_k4_restricted_to_three_vertices_is_k3():
    view = as_subgraph(complete_graph(4), vertex_filter=lambda v: v in (0, 1, 2))
    assert view.vertex_count == 3
    assert view.edge_count == 3
    assert not view.contains_vertex(3)


def test_all_pass_filters_equal_backing():
    g = complete_graph(5)
    queries_agree(as_subgraph(g), g)


def test_subgraph_view_equals_materialized_copy():
    for seed in range(10):
        g = random_simple_graph(seed, 20, 0.3)
        rng = new_rng(seed + 50)
        keep = {v for v in g.vertices() if rng.random() < 0.6}
        banned = {g.edge_index(e) for e in g.edges() if rng.random() < 0.2}
        view = as_subgraph(
            g,
            vertex_filter=lambda v: v in keep,
            edge_filter=lambda e: g.edge_index(e) not in banned,
        )
        queries_agree(view, materialize(view))


def test_undirected_view_symmetric_lookup():
    g = make_graph(2, [(0, 1)], directed=True)
    view = as_undirected(g)
    assert view.get_edge(1, 0) is not None


def test_directed_two_cycle_becomes_parallel_pair():
    g = make_graph(2, [(0, 1), (1, 0)], directed=True)
    view = as_undirected(g)
    assert view.edge_count == 2
    assert view.degree_of(0) == 2
    assert view.kind.allows_multiple_edges


def test_undirected_view_components_equal_weak_components():
    for seed in range(8):
        g = random_simple_graph(seed, 15, 0.1, directed=True)
        weak = connected_components(g)
        viewed = connected_components(as_undirected(g))
        assert weak.count == viewed.count
        for v in g.vertices():
            for u in g.vertices():
                same_weak = weak.component_of[v] == weak.component_of[u]
                same_view = viewed.component_of[v] == viewed.component_of[u]
                assert same_weak == same_view


def test_weight_overlay_prefers_overlay_falls_back_to_one():
    g = complete_graph(3)
    view = as_weighted(g)
    e01 = view.get_edge(0, 1)
    view.set_edge_weight(e01, 3.0)
    assert view.edge_weight(e01) == 3.0
    assert view.edge_weight(view.get_edge(1, 2)) == 1.0
    assert g.edge_weight(g.get_edge(0, 1)) == 1.0  # backing untouched


def test_dijkstra_on_overlay_equals_materialized():
    for seed in range(6):
        g = gnp(25, 0.2, seed)
        weighted = with_uniform_integer_weights(g, 1, 20, seed + 1)
        overlay = {}
        for e, we in zip(g.edges(), weighted.edges()):
            overlay[e] = weighted.edge_weight(we)
        view = as_weighted(g, overlay)
        t1 = dijkstra(view, 0)
        t2 = dijkstra(materialize(view), 0)
        for v in g.vertices():
            assert t1.distance(v) == t2.distance(v)


def test_unmodifiable_rejects_mutations_tracks_backing():
    g = make_graph(2, [(0, 1)])
    view = as_unmodifiable(g)
    with pytest.raises(ImmutableGraphError):
        view.add_vertex(9)
    with pytest.raises(ImmutableGraphError):
        view.remove_edge(g.get_edge(0, 1))
    assert view.degree_of(0) == 1
    g.add_vertex(2)
    g.add_edge(1, 2)
    assert view.vertex_count == 3  # delegation is live
    assert view.degree_of(1) == 2


def test_undirected_view_rejects_edge_addition():
    g = make_graph(2, [], directed=True)
    with pytest.raises(ImmutableGraphError):
        as_undirected(g).add_edge(0, 1)
