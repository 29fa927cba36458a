"""Shortest-path algorithms against each other and against enumeration."""

import math

import numpy as np
import pytest

from edgekit import (
    DAryHeap,
    NegativeCycleError,
    NegativeWeightError,
    astar,
    bellman_ford,
    bidirectional_dijkstra,
    dijkstra,
    floyd_warshall,
    graph_measures,
    johnson_apsp,
    yen_k_shortest,
)
from edgekit.generators import complete_graph, grid_graph, with_uniform_integer_weights
from edgekit.rng import new_rng

from conftest import all_simple_path_weights, make_graph, random_weighted_graph


def test_heap_sorts_and_decreases():
    h = DAryHeap()
    rng = new_rng(0)
    keys = [float(rng.integers(0, 1000)) for _ in range(300)]
    for i, k in enumerate(keys):
        h.insert(i, k)
    h.decrease(17, -1.0)
    keys[17] = -1.0
    drained = []
    while h:
        drained.append(h.pop_min()[1])
    assert drained == sorted(keys)


def test_dijkstra_path_graph():
    g = make_graph(3, [(0, 1, 1.0), (1, 2, 1.0)], weighted=True)
    t = dijkstra(g, 0)
    assert [t.distance(v) for v in range(3)] == [0.0, 1.0, 2.0]


def test_dijkstra_prefers_cheap_detour():
    g = make_graph(3, [(0, 1, 5.0), (0, 2, 1.0), (2, 1, 1.0)], weighted=True)
    t = dijkstra(g, 0)
    assert t.distance(1) == 2.0
    path = t.path_to(1)
    assert path.vertices == [0, 2, 1]
    assert path.weight == 2.0


def test_dijkstra_rejects_negative_edge_naming_it():
    g = make_graph(2, [(0, 1, -2.0)], weighted=True, directed=True)
    with pytest.raises(NegativeWeightError) as err:
        dijkstra(g, 0)
    assert err.value.edge is not None


def test_dijkstra_vs_bellman_ford_random():
    for seed in range(25):
        g = random_weighted_graph(seed, 40, 0.15)
        t1, t2 = dijkstra(g, 0), bellman_ford(g, 0)
        for v in g.vertices():
            assert t1.distance(v) == t2.distance(v)


def test_sssp_tree_paths_reconstruct_distances():
    g = random_weighted_graph(3, 30, 0.2)
    t = dijkstra(g, 0)
    for v in g.vertices():
        p = t.path_to(v)
        if p is None:
            assert not t.reached(v)
            continue
        assert p.vertices[0] == 0 and p.vertices[-1] == v
        assert sum(g.edge_weight(e) for e in p.edges) == t.distance(v)
        # subpath optimality: every prefix is a shortest path to its endpoint
        acc = 0.0
        for vert, e in zip(p.vertices[1:], p.edges):
            acc += g.edge_weight(e)
            assert acc == t.distance(vert)


def test_bidirectional_equals_unidirectional_on_many_queries():
    queries = 0
    for seed in range(10):
        g = random_weighted_graph(seed + 50, 40, 0.1)
        for s in range(0, 40, 4):
            for t in range(0, 40, 4):
                a = dijkstra(g, s, t)
                b = bidirectional_dijkstra(g, s, t)
                queries += 1
                if a is None:
                    assert b is None
                else:
                    assert b is not None and a.weight == b.weight
    assert queries >= 1000


def test_bidirectional_source_equals_target():
    g = random_weighted_graph(1, 10, 0.3)
    p = bidirectional_dijkstra(g, 3, 3)
    assert p.vertices == [3] and p.weight == 0.0


def test_bidirectional_disconnected_pair():
    g = make_graph(4, [(0, 1, 1.0), (2, 3, 1.0)], weighted=True)
    assert bidirectional_dijkstra(g, 0, 3) is None


def test_bellman_ford_negative_edges():
    g = make_graph(3, [(0, 1, -2.0), (1, 2, 3.0)], weighted=True, directed=True)
    t = bellman_ford(g, 0)
    assert t.distance(2) == 1.0


def test_bellman_ford_negative_triangle_witness():
    g = make_graph(
        3, [(0, 1, 1.0), (1, 2, -3.0), (2, 0, 1.0)], weighted=True, directed=True
    )
    with pytest.raises(NegativeCycleError) as err:
        bellman_ford(g, 0)
    assert sum(g.edge_weight(e) for e in err.value.cycle) < 0


def test_bellman_ford_vs_floyd_warshall_row():
    for seed in range(10):
        g = random_weighted_graph(seed + 100, 20, 0.25, directed=True)
        fw = floyd_warshall(g)
        t = bellman_ford(g, 0)
        for v in g.vertices():
            assert t.distance(v) == fw.distance(0, v)


def test_apsp_k3_and_diagonal():
    fw = floyd_warshall(with_uniform_integer_weights(complete_graph(3), 1, 1, 0))
    assert all(fw.distance(i, j) == 1.0 for i in range(3) for j in range(3) if i != j)
    assert all(fw.distance(i, i) == 0.0 for i in range(3))


def test_johnson_equals_floyd_warshall_exactly():
    for seed in range(10):
        g = random_weighted_graph(seed + 150, 25, 0.15, directed=seed % 2 == 0)
        assert np.array_equal(johnson_apsp(g).array, floyd_warshall(g).array)


def test_johnson_handles_negative_weights():
    g = make_graph(
        4,
        [(0, 1, 2.0), (1, 2, -1.0), (0, 2, 4.0), (2, 3, 1.0)],
        weighted=True,
        directed=True,
    )
    j = johnson_apsp(g)
    assert j.distance(0, 2) == 1.0
    assert j.distance(0, 3) == 2.0
    assert np.array_equal(j.array, floyd_warshall(g).array)


def test_apsp_negative_cycle_raises():
    g = make_graph(2, [(0, 1, -1.0), (1, 0, -1.0)], weighted=True, directed=True)
    with pytest.raises(NegativeCycleError):
        johnson_apsp(g)
    with pytest.raises(NegativeCycleError):
        floyd_warshall(g)


def test_astar_zero_heuristic_equals_dijkstra():
    for seed in range(8):
        g = random_weighted_graph(seed + 200, 30, 0.15)
        for target in (3, 17, 29):
            a = astar(g, 0, target, lambda v, t: 0.0)
            d = dijkstra(g, 0, target)
            assert (a is None) == (d is None)
            if a is not None:
                assert a.weight == d.weight


def test_astar_manhattan_on_grid():
    rows = cols = 6
    g = with_uniform_integer_weights(grid_graph(rows, cols), 1, 9, 7)

    def manhattan(v, t):
        return abs(v // cols - t // cols) + abs(v % cols - t % cols)

    for target in (7, 23, 35):
        a = astar(g, 0, target, manhattan)
        d = dijkstra(g, 0, target)
        assert a.weight == d.weight


def test_yen_diamond_two_paths():
    g = make_graph(
        4, [(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)], weighted=True
    )
    paths = yen_k_shortest(g, 0, 3, 2)
    assert len(paths) == 2
    assert [p.weight for p in paths] == [2.0, 2.0]


def test_yen_k1_equals_dijkstra():
    g = random_weighted_graph(9, 20, 0.3)
    [p] = yen_k_shortest(g, 0, 11, 1)
    assert p.weight == dijkstra(g, 0, 11).weight


def test_yen_matches_exhaustive_enumeration():
    for seed in range(15):
        g = random_weighted_graph(seed + 300, 8, 0.45)
        expected = all_simple_path_weights(g, 0, 7)[:5]
        got = yen_k_shortest(g, 0, 7, 5)
        assert [p.weight for p in got] == expected
        for p in got:
            assert len(set(p.vertices)) == len(p.vertices)  # loopless
        weights = [p.weight for p in got]
        assert weights == sorted(weights)
        assert len({tuple(p.vertices) for p in got}) == len(got)


def test_measures_p3():
    m = graph_measures(make_graph(3, [(0, 1), (1, 2)]))
    assert m.diameter == 2 and m.radius == 1
    assert m.center == [1] and m.periphery == [0, 2]


def test_measures_k3():
    m = graph_measures(complete_graph(3))
    assert m.diameter == m.radius == 1


def test_measures_vs_floyd_warshall():
    for seed in range(6):
        g = random_weighted_graph(seed + 400, 15, 0.3)
        fw = floyd_warshall(g)
        m = graph_measures(g)
        n = g.vertex_count
        for i, v in enumerate(g.vertices()):
            ecc = max(fw.array[i, :])
            assert m.eccentricity[v] == (ecc if not math.isinf(ecc) else math.inf)
