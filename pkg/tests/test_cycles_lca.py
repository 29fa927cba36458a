"""Cycle enumeration/bases and the four LCA schemes."""

import pytest

from edgekit import (
    GraphKindError,
    cycle_basis,
    dag_deepest_common_ancestors,
    enumerate_simple_cycles,
    lca_batch_tarjan,
    lca_preprocess,
    lca_query,
)
from edgekit.generators import complete_graph, ring_graph, star_graph
from edgekit.rng import new_rng

from conftest import count_simple_cycles_bruteforce, gf2_rank, make_graph, random_simple_graph


def test_directed_triangle_one_cycle():
    g = make_graph(3, [(0, 1), (1, 2), (2, 0)], directed=True)
    assert enumerate_simple_cycles(g) == [[0, 1, 2]]


def test_two_cycle():
    g = make_graph(2, [(0, 1), (1, 0)], directed=True)
    assert enumerate_simple_cycles(g) == [[0, 1]]


def test_complete_digraph_four_vertices_twenty_cycles():
    g = make_graph(4, [(i, j) for i in range(4) for j in range(4) if i != j], directed=True)
    assert len(enumerate_simple_cycles(g)) == 20


def test_self_loop_is_a_cycle():
    g = make_graph(2, [(0, 0), (0, 1)], directed=True, loops=True, multi=True)
    assert [[0]] == [c for c in enumerate_simple_cycles(g) if len(c) == 1]


def test_cycle_counts_match_bruteforce():
    for seed in range(30):
        g = random_simple_graph(seed, 3 + seed % 5, 0.45, directed=True)
        got = enumerate_simple_cycles(g)
        assert len(got) == count_simple_cycles_bruteforce(g)
        canon = set()
        for cyc in got:
            idx = cyc.index(min(cyc))
            canon.add(tuple(cyc[idx:] + cyc[:idx]))
        assert len(canon) == len(got)  # no duplicates up to rotation


def test_cycles_require_directed():
    with pytest.raises(GraphKindError):
        enumerate_simple_cycles(complete_graph(3))


@pytest.mark.parametrize("method", ["paton", "bfs", "dfs"])
def test_tree_has_empty_basis(method):
    assert cycle_basis(star_graph(5), method).dimension == 0


@pytest.mark.parametrize("method", ["paton", "bfs", "dfs"])
def test_k3_dimension_one(method):
    assert cycle_basis(complete_graph(3), method).dimension == 1


@pytest.mark.parametrize("method", ["paton", "bfs", "dfs"])
def test_k4_dimension_three_and_gf2_independent(method):
    g = complete_graph(4)
    basis = cycle_basis(g, method)
    assert basis.dimension == 3
    assert gf2_rank(basis.members, g) == 3


@pytest.mark.parametrize("method", ["paton", "bfs", "dfs"])
def test_basis_dimension_and_eulerian_members(method):
    from edgekit import connected_components

    for seed in range(12):
        g = random_simple_graph(seed + 60, 12, 0.25)
        basis = cycle_basis(g, method)
        c = connected_components(g).count
        assert basis.dimension == g.edge_count - g.vertex_count + c
        assert gf2_rank(basis.members, g) == basis.dimension
        for member in basis.members:
            degree = {}
            for e in member:
                degree[g.edge_source(e)] = degree.get(g.edge_source(e), 0) + 1
                degree[g.edge_target(e)] = degree.get(g.edge_target(e), 0) + 1
            assert all(d % 2 == 0 for d in degree.values())


def test_gf2_sum_of_two_members_is_eulerian():
    g = complete_graph(5)
    basis = cycle_basis(g, "paton")
    a, b = basis.members[0], basis.members[1]
    sym = {g.edge_index(e) for e in a} ^ {g.edge_index(e) for e in b}
    edges = [e for e in g.edges() if g.edge_index(e) in sym]
    degree = {}
    for e in edges:
        degree[g.edge_source(e)] = degree.get(g.edge_source(e), 0) + 1
        degree[g.edge_target(e)] = degree.get(g.edge_target(e), 0) + 1
    assert all(d % 2 == 0 for d in degree.values())


# ---------------------------------------------------------------- LCA


def random_tree(seed, n):
    rng = new_rng(seed)
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return make_graph(n, edges)


def test_lca_path():
    g = make_graph(3, [(0, 1), (1, 2)])
    idx = lca_preprocess(g, 0, "naive")
    assert lca_query(idx, 2, 1) == 1


def test_lca_star():
    g = star_graph(5)
    for method in ("naive", "binary_lifting", "euler_rmq"):
        idx = lca_preprocess(g, 0, method)
        assert lca_query(idx, 1, 2) == 0


def test_lca_non_tree_rejected():
    with pytest.raises(GraphKindError):
        lca_preprocess(ring_graph(4), 0)
    with pytest.raises(GraphKindError):
        lca_preprocess(make_graph(3, [(0, 1)]), 0)  # disconnected


def test_all_methods_match_naive_on_random_trees():
    g = random_tree(5, 500)
    naive = lca_preprocess(g, 0, "naive")
    lifting = lca_preprocess(g, 0, "binary_lifting")
    euler = lca_preprocess(g, 0, "euler_rmq")
    rng = new_rng(99)
    queries = [
        (int(rng.integers(0, 500)), int(rng.integers(0, 500))) for _ in range(1000)
    ]
    want = [naive.query(u, v) for u, v in queries]
    assert [lifting.query(u, v) for u, v in queries] == want
    assert [euler.query(u, v) for u, v in queries] == want
    assert lca_batch_tarjan(g, 0, queries) == want


def test_lca_identities():
    g = random_tree(8, 120)
    idx = lca_preprocess(g, 0, "binary_lifting")
    rng = new_rng(5)
    for _ in range(100):
        u, v = int(rng.integers(120)), int(rng.integers(120))
        assert idx.query(u, u) == u
        assert idx.query(u, v) == idx.query(v, u)
        assert idx.query(0, v) == 0  # the root is everyone's ancestor


def test_jump_table_rows_chain():
    g = random_tree(3, 60)
    idx = lca_preprocess(g, 0, "binary_lifting")
    table = idx.jump_table
    for j in range(1, len(table)):
        for v in g.vertices():
            assert table[j][v] == table[j - 1][table[j - 1][v]]


def test_sparse_table_satisfies_recurrence():
    g = random_tree(4, 80)
    idx = lca_preprocess(g, 0, "euler_rmq")
    st = idx.sparse_table
    for j in range(1, len(st)):
        span = 1 << (j - 1)
        for i in range(len(st[j])):
            assert st[j][i] == min(st[j - 1][i], st[j - 1][i + span])


def test_tarjan_edge_cases():
    g = random_tree(2, 40)
    assert lca_batch_tarjan(g, 0, []) == []
    assert lca_batch_tarjan(g, 0, [(7, 7)]) == [7]


def test_dag_deepest_common_ancestors():
    #    0 -> 1 -> 3,  0 -> 2 -> 3,  1 -> 4, 2 -> 4   (diamond over 4)
    g = make_graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)], directed=True)
    assert dag_deepest_common_ancestors(g, 3, 4) == [1, 2]
    assert dag_deepest_common_ancestors(g, 1, 2) == [0]
    assert dag_deepest_common_ancestors(g, 3, 3) == [3]


def test_dag_lca_rejects_cycles():
    g = make_graph(2, [(0, 1), (1, 0)], directed=True)
    with pytest.raises(GraphKindError):
        dag_deepest_common_ancestors(g, 0, 1)
