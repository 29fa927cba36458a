"""MST algorithms against exhaustive enumeration; union-find semantics."""

import pytest

from edgekit import GraphKindError, UnionFind, boruvka, kruskal, mst, prim
from edgekit.generators import complete_graph
from edgekit.rng import new_rng
from edgekit.traversal import connected_components

from conftest import make_graph, min_spanning_tree_bruteforce


def distinct_weight_graph(seed, n, extra_edges):
    """Connected graph with all-distinct weights (unique MST)."""
    rng = new_rng(seed)
    weights = list(rng.permutation(200)[: n - 1 + extra_edges] + 1)
    edges = []
    for v in range(1, n):  # random spanning tree backbone
        u = int(rng.integers(0, v))
        edges.append((u, v, float(weights.pop())))
    added = {(min(u, v), max(u, v)) for u, v, _ in edges}
    while weights:
        u, v = int(rng.integers(n)), int(rng.integers(n))
        if u == v or (min(u, v), max(u, v)) in added:
            continue
        added.add((min(u, v), max(u, v)))
        edges.append((u, v, float(weights.pop())))
    return make_graph(n, edges, weighted=True)


def test_k3_weight():
    g = make_graph(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)], weighted=True)
    assert mst(g).weight == 3.0


def test_single_vertex_empty_forest():
    g = make_graph(1, [], weighted=True)
    forest = mst(g, "prim")
    assert forest.edges == [] and forest.weight == 0.0


def test_directed_input_rejected():
    g = make_graph(2, [(0, 1, 1.0)], weighted=True, directed=True)
    for alg in ("prim", "kruskal", "boruvka"):
        with pytest.raises(GraphKindError):
            mst(g, alg)


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        mst(make_graph(1, [], weighted=True), "reverse_delete")


def test_distinct_weights_match_bruteforce_and_each_other():
    for seed in range(12):
        n = 6 + seed % 6
        g = distinct_weight_graph(seed, n, 4)
        want_w, want_set = min_spanning_tree_bruteforce(g)
        for alg in (prim, kruskal, boruvka):
            forest = alg(g)
            assert forest.weight == want_w
            assert frozenset(g.edge_index(e) for e in forest.edges) == want_set


def test_equal_weights_same_total():
    for seed in range(15):
        rng = new_rng(seed + 500)
        n = 10
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    edges.append((i, j, float(rng.integers(1, 5))))
        g = make_graph(n, edges, weighted=True)
        totals = {alg(g).weight for alg in (prim, kruskal, boruvka)}
        assert len(totals) == 1
        forest = kruskal(g)
        assert len(forest.edges) == n - connected_components(g).count


def test_forest_on_disconnected_input():
    g = make_graph(4, [(0, 1, 1.0), (2, 3, 2.0)], weighted=True)
    for alg in (prim, kruskal, boruvka):
        forest = alg(g)
        assert len(forest.edges) == 2
        assert forest.weight == 3.0


def test_cut_property_spot_check():
    for seed in range(8):
        g = distinct_weight_graph(seed + 30, 12, 8)
        forest = kruskal(g)
        tree_idx = {g.edge_index(e) for e in forest.edges}
        for e in forest.edges:
            # remove e from the tree, find the two sides, check e is the
            # lightest edge crossing them
            uf = UnionFind(g.vertices())
            for f in forest.edges:
                if f is not e:
                    uf.union(g.edge_source(f), g.edge_target(f))
            su = uf.find(g.edge_source(e))
            crossing = [
                g.edge_weight(f)
                for f in g.edges()
                if uf.find(g.edge_source(f)) != uf.find(g.edge_target(f))
            ]
            assert g.edge_weight(e) == min(crossing)


def test_union_find_basics():
    uf = UnionFind(["a", "b", "c"])
    assert uf.union("a", "b")
    assert uf.find("a") == uf.find("b")
    assert not uf.union("a", "b")
    assert uf.find("c") == "c"


def test_union_find_singletons():
    uf = UnionFind(range(10))
    assert len({uf.find(x) for x in range(10)}) == 10


def test_union_find_unregistered_errors():
    uf = UnionFind()
    with pytest.raises(KeyError):
        uf.find("ghost")


def test_union_find_vs_naive_partition():
    rng = new_rng(77)
    uf = UnionFind(range(30))
    partition = [{x} for x in range(30)]

    def naive_find(x):
        for group in partition:
            if x in group:
                return group
        raise AssertionError

    for _ in range(200):
        a, b = int(rng.integers(30)), int(rng.integers(30))
        ga, gb = naive_find(a), naive_find(b)
        if ga is not gb:
            ga |= gb
            partition.remove(gb)
        uf.union(a, b)
        for x in range(30):
            for y in range(30):
                assert (uf.find(x) == uf.find(y)) == (naive_find(x) is naive_find(y))
        if len(partition) == 1:
            break
