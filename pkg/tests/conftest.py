"""Shared fixtures and independent brute-force oracles.

Every oracle here recomputes its answer from first principles
(enumeration, dynamic programming, branch and bound) so the library code
under test never checks itself.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from edgekit.adjacency import AdjacencyGraph
from edgekit.core import GraphKind
from edgekit.rng import new_rng


# --------------------------------------------------------------------------
# graph construction helpers
# --------------------------------------------------------------------------


def make_graph(n, edges, directed=False, weighted=False, loops=False, multi=False):
    g = AdjacencyGraph(GraphKind(directed, loops, multi, weighted))
    for v in range(n):
        g.add_vertex(v)
    for t in edges:
        if weighted:
            g.add_edge(t[0], t[1], weight=t[2])
        else:
            g.add_edge(t[0], t[1])
    return g


def random_simple_edges(rng, n, p):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                out.append((i, j))
    return out


def random_weighted_graph(seed, n, p, w_lo=1, w_hi=100, directed=False):
    rng = new_rng(seed)
    edges = []
    for i in range(n):
        columns = range(n) if directed else range(i + 1, n)
        for j in columns:
            if i != j and rng.random() < p:
                edges.append((i, j, float(rng.integers(w_lo, w_hi + 1))))
    return make_graph(n, edges, directed=directed, weighted=True)


def random_simple_graph(seed, n, p, directed=False):
    rng = new_rng(seed)
    edges = []
    if directed:
        for i in range(n):
            for j in range(n):
                if i != j and rng.random() < p:
                    edges.append((i, j))
    else:
        edges = random_simple_edges(rng, n, p)
    return make_graph(n, edges, directed=directed)


# --------------------------------------------------------------------------
# matching oracles
# --------------------------------------------------------------------------


def adjacency_masks(g):
    verts = list(g.vertices())
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for e in g.edges():
        a, b = index[g.edge_source(e)], index[g.edge_target(e)]
        if a != b:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return verts, masks


def max_matching_size_bruteforce(g) -> int:
    """Maximum cardinality matching by bitmask dynamic programming."""
    _, masks = adjacency_masks(g)
    n = len(masks)

    @lru_cache(maxsize=None)
    def go(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = go(rest)
        nb = masks[v] & rest
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            cand = 1 + go(rest & ~(1 << u))
            if cand > best:
                best = cand
        return best

    result = go((1 << n) - 1)
    go.cache_clear()
    return result


def max_weight_matching_bruteforce(g) -> float:
    """Maximum total weight over all matchings (not necessarily maximum
    cardinality), by bitmask dynamic programming."""
    verts = list(g.vertices())
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    wmat = [[None] * n for _ in range(n)]
    for e in g.edges():
        a, b = index[g.edge_source(e)], index[g.edge_target(e)]
        if a == b:
            continue
        w = g.edge_weight(e)
        if wmat[a][b] is None or w > wmat[a][b]:
            wmat[a][b] = wmat[b][a] = w

    @lru_cache(maxsize=None)
    def go(mask: int) -> float:
        if not mask:
            return 0.0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = go(rest)
        for u in range(n):
            if rest & (1 << u) and wmat[v][u] is not None:
                cand = wmat[v][u] + go(rest & ~(1 << u))
                if cand > best:
                    best = cand
        return best

    result = go((1 << n) - 1)
    go.cache_clear()
    return result


def alternating_augmenting_path_exists(g, matching) -> bool:
    """Independent DFS search for an augmenting alternating simple path."""
    verts, masks = adjacency_masks(g)
    index = {v: i for i, v in enumerate(verts)}
    mate = [None] * len(verts)
    for v, w in matching.mates.items():
        mate[index[v]] = index[w]

    def from_even(v, visited) -> bool:
        nb = masks[v]
        while nb:
            w = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if w in visited or mate[v] == w:
                continue
            if mate[w] is None:
                return True
            x = mate[w]
            if x in visited:
                continue
            if from_even(x, visited | {w, x}):
                return True
        return False

    frees = [i for i in range(len(verts)) if mate[i] is None]
    return any(from_even(f, {f}) for f in frees)


# --------------------------------------------------------------------------
# cover / clique / colouring oracles
# --------------------------------------------------------------------------


def min_vertex_cover_size(g) -> int:
    edges = [
        (g.edge_source(e), g.edge_target(e))
        for e in g.edges()
        if g.edge_source(e) != g.edge_target(e)
    ]
    best = [g.vertex_count]

    def bb(remaining, chosen):
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        u, v = remaining[0]
        bb([e for e in remaining if u not in e], chosen + 1)
        bb([e for e in remaining if v not in e], chosen + 1)

    bb(edges, 0)
    return best[0]


def maximal_cliques_bruteforce(g):
    """All maximal cliques by subset enumeration (n <= ~16)."""
    verts, masks = adjacency_masks(g)
    n = len(verts)
    cliques = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask & (1 << i)]
        if any(not masks[a] & (1 << b) for a, b in itertools.combinations(members, 2)):
            continue
        # maximal: no outside vertex adjacent to all members
        if any(
            all(masks[o] & (1 << m) for m in members)
            for o in range(n)
            if not mask & (1 << o)
        ):
            continue
        cliques.append(frozenset(verts[i] for i in members))
    return set(cliques)


# --------------------------------------------------------------------------
# spanning / flow / path oracles
# --------------------------------------------------------------------------


def min_spanning_tree_bruteforce(g):
    """(weight, edge-index frozenset) over all spanning trees (connected g)."""
    from edgekit.spanning import UnionFind

    edges = list(g.edges())
    n = g.vertex_count
    best_w, best_set = None, None
    for combo in itertools.combinations(edges, n - 1):
        uf = UnionFind(g.vertices())
        ok = True
        for e in combo:
            if not uf.union(g.edge_source(e), g.edge_target(e)):
                ok = False
                break
        if not ok:
            continue
        w = sum(g.edge_weight(e) for e in combo)
        if best_w is None or w < best_w:
            best_w = w
            best_set = frozenset(g.edge_index(e) for e in combo)
    return best_w, best_set


def min_st_cut_bruteforce(g, s, t) -> float:
    """Minimum s-t cut value over all 2^(n-2) partitions."""
    others = [v for v in g.vertices() if v not in (s, t)]
    best = None
    for bits in range(1 << len(others)):
        side = {s}
        for i, v in enumerate(others):
            if bits & (1 << i):
                side.add(v)
        w = 0.0
        for e in g.edges():
            u, v = g.edge_source(e), g.edge_target(e)
            if g.kind.directed:
                if u in side and v not in side:
                    w += g.edge_weight(e)
            elif (u in side) != (v in side):
                w += g.edge_weight(e)
        if best is None or w < best:
            best = w
    return best


def min_global_cut_bruteforce(g) -> float:
    verts = list(g.vertices())
    first, rest = verts[0], verts[1:]
    best = None
    for bits in range(1 << len(rest)):
        side = {first}
        for i, v in enumerate(rest):
            if bits & (1 << i):
                side.add(v)
        if len(side) == len(verts):
            continue
        w = 0.0
        for e in g.edges():
            u, v = g.edge_source(e), g.edge_target(e)
            if (u in side) != (v in side):
                w += g.edge_weight(e)
        if best is None or w < best:
            best = w
    return best


def all_simple_path_weights(g, s, t):
    """Weights of every simple s-t path (tiny graphs only)."""
    out = []

    def dfs(v, visited, acc):
        if v == t:
            out.append(acc)
            return
        for e in g.out_edges_of(v):
            w = g.opposite(e, v)
            if w not in visited:
                visited.add(w)
                dfs(w, visited, acc + g.edge_weight(e))
                visited.remove(w)

    dfs(s, {s}, 0.0)
    return sorted(out)


def check_flow(g, result) -> None:
    """Capacity and conservation checks for a FlowResult."""
    net = {v: 0.0 for v in g.vertices()}
    for e, f in result.edge_flow.items():
        cap = g.edge_weight(e)
        u, v = g.edge_source(e), g.edge_target(e)
        if g.kind.directed:
            assert -1e-9 <= f <= cap + 1e-9, f"flow {f} outside [0, {cap}]"
        else:
            assert abs(f) <= cap + 1e-9, f"|flow| {f} exceeds capacity {cap}"
        net[u] += f
        net[v] -= f
    for v, x in net.items():
        if v == result.source:
            assert abs(x - result.value) <= 1e-9
        elif v == result.sink:
            assert abs(x + result.value) <= 1e-9
        else:
            assert abs(x) <= 1e-9, f"conservation violated at {v!r}"


def count_simple_cycles_bruteforce(g) -> int:
    """Directed simple cycles, counted once per rotation class."""
    verts = list(g.vertices())
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [set() for _ in range(n)]
    for e in g.edges():
        adj[index[g.edge_source(e)]].add(index[g.edge_target(e)])
    count = 0

    def dfs(s, v, visited):
        nonlocal count
        for w in adj[v]:
            if w == s:
                count += 1
            elif w > s and w not in visited:
                visited.add(w)
                dfs(s, w, visited)
                visited.remove(w)

    for s in range(n):
        dfs(s, s, set())
    return count


def tsp_bruteforce(g) -> float:
    verts = list(g.vertices())
    first, rest = verts[0], verts[1:]
    best = None
    for perm in itertools.permutations(rest):
        tour = [first, *perm, first]
        w = 0.0
        for a, b in zip(tour, tour[1:]):
            w += g.edge_weight(g.get_edge(a, b))
        if best is None or w < best:
            best = w
    return best


def gf2_rank(members, g) -> int:
    """Rank over GF(2) of edge sets encoded as edge-index bitmasks."""
    rows = []
    for member in members:
        row = 0
        for e in member:
            row ^= 1 << g.edge_index(e)
        rows.append(row)
    rank = 0
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            rank += 1
    return rank


@pytest.fixture
def rng():
    return new_rng(12345)
