"""Matchings: Edmonds blossom (general), Hopcroft-Karp (bipartite),
the Hungarian method (bipartite weighted perfect) and two linear-time
half-approximations.

The blossom implementation covers maximum *cardinality* only; weighted
general matching is out of scope here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph, require_undirected
from .errors import GraphError, NotBipartiteError
from .traversal import is_bipartite


@dataclass
class MatchingResult:
    """A matching: edge set, cardinality, total weight, mate lookup."""

    edges: list
    cardinality: int
    weight: float
    mates: dict  # vertex -> matched partner (entries in both directions)

    def mate(self, v):
        return self.mates.get(v)

    def is_matched(self, v) -> bool:
        return v in self.mates


def _result_from_pairs(g: Graph, pairs) -> MatchingResult:
    edges, mates, total = [], {}, 0.0
    for u, v in pairs:
        e = g.get_edge(u, v)
        if e is None:
            raise GraphError(f"no edge between matched pair ({u!r}, {v!r})")
        edges.append(e)
        total += g.edge_weight(e)
        mates[u] = v
        mates[v] = u
    return MatchingResult(edges, len(edges), total, mates)


def _index_adjacency(g: Graph):
    """Vertex payloads to 0..n-1 plus loop-free deduplicated neighbour lists."""
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    adj: list[list[int]] = [[] for _ in verts]
    seen: list[set] = [set() for _ in verts]
    for e in g.edges():
        a, b = index[g.edge_source(e)], index[g.edge_target(e)]
        if a == b:
            continue
        if b not in seen[a]:
            seen[a].add(b)
            adj[a].append(b)
        if a not in seen[b]:
            seen[b].add(a)
            adj[b].append(a)
    return verts, index, adj


def edmonds_max_cardinality(g: Graph) -> MatchingResult:
    """Maximum cardinality matching via blossom shrinking.

    Alternating-tree BFS from each free vertex; odd cycles are contracted
    on the fly through a base[] relabelling.  O(V^3).
    """
    require_undirected(g, "edmonds_max_cardinality")
    verts, _, adj = _index_adjacency(g)
    n = len(verts)
    match = [-1] * n

    # cheap deterministic greedy seed cuts down augmentation rounds
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break

    p = [-1] * n
    base = list(range(n))

    def lowest_common_base(a, b):
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = p[match[b]]

    def mark_blossom(v, b, child, in_blossom):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting_path(root) -> bool:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # odd cycle: contract the blossom around its base
                    b = lowest_common_base(v, to)
                    in_blossom = [False] * n
                    mark_blossom(v, b, to, in_blossom)
                    mark_blossom(to, b, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to  # augment: flip matched edges along the path
                        while u != -1:
                            pv = p[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)
    pairs = [(verts[v], verts[match[v]]) for v in range(n) if v < match[v]]
    return _result_from_pairs(g, pairs)


def hopcroft_karp(g: Graph, partition=None) -> MatchingResult:
    """Maximum cardinality matching in a bipartite graph.

    ``partition`` is the left side; when omitted it is computed, raising
    :class:`NotBipartiteError` (with an odd-cycle witness) if none exists.
    """
    require_undirected(g, "hopcroft_karp")
    if partition is None:
        two = is_bipartite(g)
        if not two:
            raise NotBipartiteError("graph is not bipartite", odd_cycle=two.odd_cycle)
        left_payloads = two.sides[0]
    else:
        left_payloads = list(partition)
        left_set = set(left_payloads)
        for e in g.edges():
            u, v = g.edge_source(e), g.edge_target(e)
            if (u in left_set) == (v in left_set):
                raise GraphError("partition is not a valid 2-colouring of the graph")

    verts, index, adj = _index_adjacency(g)
    left = [index[v] for v in left_payloads]
    is_left = [False] * len(verts)
    for i in left:
        is_left[i] = True

    INF = float("inf")
    match = [-1] * len(verts)
    dist = {}

    def bfs() -> bool:
        queue = deque()
        for v in left:
            if match[v] == -1:
                dist[v] = 0
                queue.append(v)
            else:
                dist[v] = INF
        found = False
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                w = match[u]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return found

    def dfs(v) -> bool:
        for u in adj[v]:
            w = match[u]
            if w == -1 or (dist[w] == dist[v] + 1 and dfs(w)):
                match[v] = u
                match[u] = v
                return True
        dist[v] = INF
        return False

    while bfs():
        for v in left:
            if match[v] == -1:
                dfs(v)

    pairs = [(verts[v], verts[match[v]]) for v in left if match[v] != -1]
    return _result_from_pairs(g, pairs)


def solve_assignment(cost) -> tuple[list[int], float]:
    """Minimum-cost perfect assignment on a square matrix (O(n^3) potentials).

    Returns (column of each row, total cost).  Exact on integer inputs.
    """
    n = len(cost)
    if any(len(row) != n for row in cost):
        raise ValueError("cost matrix must be square")
    INF = float("inf")
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row matched to column j (1-based; 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = -1
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    col_of_row = [0] * n
    for j in range(1, n + 1):
        if p[j]:
            col_of_row[p[j] - 1] = j - 1
    total = sum(cost[i][col_of_row[i]] for i in range(n))
    return col_of_row, total


def hungarian_min_weight_perfect(g: Graph, left=None, right=None) -> MatchingResult:
    """Minimum-weight perfect matching on a complete bipartite graph.

    Sides may be given explicitly; otherwise they are computed.  Raises when
    the sides differ in size or some cross pair has no edge.
    """
    require_undirected(g, "hungarian_min_weight_perfect")
    if left is None or right is None:
        two = is_bipartite(g)
        if not two:
            raise NotBipartiteError("graph is not bipartite", odd_cycle=two.odd_cycle)
        left, right = two.sides
    left, right = list(left), list(right)
    if len(left) != len(right):
        raise GraphError(
            f"perfect matching impossible: sides have sizes {len(left)} != {len(right)}"
        )
    cost = []
    for a in left:
        row = []
        for b in right:
            e = g.get_edge(a, b)
            if e is None:
                raise GraphError(f"cost matrix incomplete: no edge ({a!r}, {b!r})")
            row.append(g.edge_weight(e))
        cost.append(row)
    cols, _ = solve_assignment(cost)
    return _result_from_pairs(g, [(left[i], right[cols[i]]) for i in range(len(left))])


def approx_matching(g: Graph, method: str = "greedy") -> MatchingResult:
    """Maximal matching of weight at least half the optimum.

    ``greedy`` scans edges by descending weight; ``path_growing`` grows
    paths along locally heaviest edges into two alternating matchings and
    keeps the heavier, then tops it up to maximality.  Weights must be
    non-negative.
    """
    require_undirected(g, "approx_matching")
    if method == "greedy":
        chosen = _greedy_edges(g, g.edges())
    elif method == "path_growing":
        chosen = _path_growing_edges(g)
    else:
        raise ValueError(f"unknown matching approximation {method!r}")
    return _result_from_edges(g, chosen)


def _result_from_edges(g: Graph, edges) -> MatchingResult:
    mates, total = {}, 0.0
    for e in edges:
        u, v = g.edge_source(e), g.edge_target(e)
        mates[u] = v
        mates[v] = u
        total += g.edge_weight(e)
    return MatchingResult(list(edges), len(edges), total, mates)


def _greedy_edges(g: Graph, edges, taken=None) -> list:
    ranked = sorted(edges, key=lambda e: (-g.edge_weight(e), g.edge_index(e)))
    taken = dict(taken or {})
    chosen = []
    for e in ranked:
        u, v = g.edge_source(e), g.edge_target(e)
        if u == v or u in taken or v in taken:
            continue
        taken[u] = v
        taken[v] = u
        chosen.append(e)
    return chosen


def _path_growing_edges(g: Graph) -> list:
    sides: tuple[list, list] = ([], [])
    alive: dict = {v: None for v in g.vertices()}
    for start in g.vertices():
        if start not in alive:
            continue
        x = start
        side = 0
        while x in alive:
            best = None
            best_key = None
            for e in g.edges_of(x):
                y = g.opposite(e, x)
                if y == x or y not in alive:
                    continue
                key = (-g.edge_weight(e), g.edge_index(e))
                if best_key is None or key < best_key:
                    best, best_key = (e, y), key
            del alive[x]
            if best is None:
                break
            e, y = best
            sides[side].append(e)
            side = 1 - side
            x = y

    def total(edges):
        return sum(g.edge_weight(e) for e in edges)

    better = sides[0] if total(sides[0]) >= total(sides[1]) else sides[1]
    # top up to maximality: the half-weight bound only needs weights >= 0
    taken = {}
    for e in better:
        taken[g.edge_source(e)] = e
        taken[g.edge_target(e)] = e
    return better + _greedy_edges(g, g.edges(), taken)
