"""Closed tours: optimal and approximate travelling-salesman cycles, plus
Eulerian circuits via Hierholzer's algorithm.

Tour sequences are closed explicitly: the first vertex is repeated at the
end, so a Hamiltonian tour over n vertices lists n+1 entries.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph, require_undirected
from .errors import GraphError, GraphKindError, NotEulerianError
from .spanning import kruskal

HELD_KARP_DEFAULT_CAP = 20


@dataclass
class Tour:
    """Closed walk: ``vertices[0] == vertices[-1]``; ``weight`` sums its edges."""

    vertices: list
    weight: float


def _cost_lookup(g: Graph):
    """Complete-graph cost accessor; raises when a pair has no edge."""
    verts = g.vertex_list()

    def cost(u, v) -> float:
        e = g.get_edge(u, v)
        if e is None:
            raise GraphKindError(f"graph is not complete: no edge ({u!r}, {v!r})")
        return g.edge_weight(e)

    return verts, cost


def tsp(g: Graph, method: str = "held_karp", **options) -> Tour:
    """Travelling-salesman tour of a complete weighted graph.

    ``held_karp`` is exact (capped at ``cap`` vertices, default 20, because
    the table is O(2^n * n)); ``mst_approx`` doubles a minimum spanning
    tree and is a 2-approximation on metric instances; ``two_opt`` improves
    a starting tour until no single 2-edge exchange helps.
    """
    if method == "held_karp":
        return tsp_held_karp(g, **options)
    if method == "mst_approx":
        return tsp_mst_approx(g, **options)
    if method == "two_opt":
        return tsp_two_opt(g, **options)
    raise ValueError(f"unknown tsp method {method!r}")


def tsp_held_karp(g: Graph, cap: int = HELD_KARP_DEFAULT_CAP) -> Tour:
    verts, cost = _cost_lookup(g)
    n = len(verts)
    if n > cap:
        raise GraphError(
            f"Held-Karp needs O(2^n) space: {n} vertices exceeds the cap of {cap}"
        )
    if n == 0:
        return Tour([], 0.0)
    if n == 1:
        return Tour([verts[0], verts[0]], 0.0)

    c = [[0.0 if i == j else cost(verts[i], verts[j]) for j in range(n)] for i in range(n)]
    full = 1 << (n - 1)  # subsets of vertices 1..n-1; vertex 0 is the anchor
    INF = float("inf")
    dp = [[INF] * (n - 1) for _ in range(full)]
    back = [[-1] * (n - 1) for _ in range(full)]
    for j in range(n - 1):
        dp[1 << j][j] = c[0][j + 1]
    for mask in range(1, full):
        row = dp[mask]
        for j in range(n - 1):
            cur = row[j]
            if cur == INF or not mask & (1 << j):
                continue
            for k in range(n - 1):
                if mask & (1 << k):
                    continue
                nxt = mask | (1 << k)
                cand = cur + c[j + 1][k + 1]
                if cand < dp[nxt][k]:
                    dp[nxt][k] = cand
                    back[nxt][k] = j
    best_j = -1
    best = INF
    for j in range(n - 1):
        cand = dp[full - 1][j] + c[j + 1][0]
        if cand < best:
            best, best_j = cand, j
    order = []
    mask, j = full - 1, best_j
    while j != -1:
        order.append(j + 1)
        mask, j = mask ^ (1 << j), back[mask][j]
    order.reverse()
    cycle = [verts[0]] + [verts[i] for i in order] + [verts[0]]
    return Tour(cycle, best)


def tsp_mst_approx(g: Graph) -> Tour:
    """Preorder walk of a minimum spanning tree (metric 2-approximation)."""
    require_undirected(g, "tsp_mst_approx")
    verts, cost = _cost_lookup(g)
    if not verts:
        return Tour([], 0.0)
    if len(verts) == 1:
        return Tour([verts[0], verts[0]], 0.0)
    forest = kruskal(g)
    tree_adj: dict = {v: [] for v in verts}
    for e in forest.edges:
        u, v = g.edge_source(e), g.edge_target(e)
        tree_adj[u].append(v)
        tree_adj[v].append(u)
    seen = {}
    stack = [verts[0]]
    order = []
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen[v] = None
        order.append(v)
        for w in reversed(tree_adj[v]):
            if w not in seen:
                stack.append(w)
    cycle = order + [order[0]]
    return Tour(cycle, sum(cost(cycle[i], cycle[i + 1]) for i in range(len(order))))


def tsp_two_opt(g: Graph, start: Tour | None = None) -> Tour:
    """First-improvement 2-opt descent from ``start`` (default: MST tour).

    Terminates because every accepted exchange strictly reduces the weight;
    the result admits no improving single 2-edge exchange.
    """
    require_undirected(g, "tsp_two_opt")
    verts, cost = _cost_lookup(g)
    if len(verts) < 4:
        return tsp_held_karp(g) if start is None else start
    tour = list((start or tsp_mst_approx(g)).vertices[:-1])
    n = len(tour)
    improved = True
    while improved:
        improved = False
        for i in range(n - 1):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue  # same edge pair
                a, b = tour[i], tour[i + 1]
                c_, d = tour[j], tour[(j + 1) % n]
                delta = cost(a, c_) + cost(b, d) - cost(a, b) - cost(c_, d)
                if delta < 0:
                    tour[i + 1 : j + 1] = reversed(tour[i + 1 : j + 1])
                    improved = True
        # repeat full scans until one pass finds nothing
    cycle = tour + [tour[0]]
    return Tour(cycle, sum(cost(cycle[i], cycle[i + 1]) for i in range(n)))


def eulerian_circuit(g: Graph) -> Tour:
    """A circuit using every edge exactly once (Hierholzer).

    Requires the usual Euler conditions and names the violated one
    otherwise: even degrees (undirected) or in-degree == out-degree
    (directed), and one connected component carrying all edges.
    """
    if g.edge_count == 0:
        return Tour([], 0.0)
    directed = g.kind.directed
    start = None
    for v in g.vertices():
        if g.degree_of(v) > 0:
            if start is None:
                start = v
            if directed:
                if g.in_degree_of(v) != g.out_degree_of(v):
                    raise NotEulerianError(
                        f"in-degree != out-degree at vertex {v!r}"
                    )
            elif g.degree_of(v) % 2:
                raise NotEulerianError(f"odd degree at vertex {v!r}")

    # all edges must live in one component (isolated vertices are fine)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for e in g.edges_of(v):
            w = g.opposite(e, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    for v in g.vertices():
        if g.degree_of(v) > 0 and v not in seen:
            raise NotEulerianError("edges span more than one connected component")

    incident = {
        v: (g.out_edges_of(v) if directed else g.edges_of(v))
        for v in seen
    }
    ptr = {v: 0 for v in seen}
    used: set = set()
    stack: list = [(start, None)]
    trail: list = []
    while stack:
        v, via = stack[-1]
        row = incident[v]
        i = ptr[v]
        while i < len(row) and g.edge_index(row[i]) in used:
            i += 1
        ptr[v] = i
        if i == len(row):
            trail.append((v, via))
            stack.pop()
            continue
        e = row[i]
        used.add(g.edge_index(e))
        stack.append((g.opposite(e, v) if not directed else g.edge_target(e), e))
    trail.reverse()
    vertices = [v for v, _ in trail]
    weight = sum(g.edge_weight(e) for _, e in trail if e is not None)
    return Tour(vertices, weight)
