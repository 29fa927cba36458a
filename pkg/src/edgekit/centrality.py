"""Vertex importance: PageRank, Brandes betweenness, closeness/harmonic,
and k-core numbers.

PageRank reads the graph once into flat index arrays and then iterates on
those, never touching the graph again inside the power loop.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import Graph, require_undirected
from .errors import NegativeWeightError
from .heaps import DAryHeap


@dataclass
class ScoreMap:
    """Per-vertex scores plus iteration metadata for iterative methods."""

    scores: dict
    iterations: int | None = None
    converged: bool | None = None

    def __getitem__(self, v) -> float:
        return self.scores[v]


def pagerank(
    g: Graph,
    damping: float = 0.85,
    max_iterations: int = 20,
    tolerance: float = 1e-16,
) -> ScoreMap:
    """Power-iteration PageRank.

    Undirected graphs are treated as bidirected; the rank mass of dangling
    vertices is redistributed uniformly.  Iteration stops after
    ``max_iterations`` rounds or once the L1 change drops below
    ``tolerance``.  Scores always sum to 1.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError("damping factor must lie strictly between 0 and 1")
    verts = g.vertex_list()
    n = len(verts)
    if n == 0:
        return ScoreMap({}, iterations=0, converged=True)
    index = {v: i for i, v in enumerate(verts)}

    srcs, dsts = [], []
    for e in g.edges():
        u, v = index[g.edge_source(e)], index[g.edge_target(e)]
        srcs.append(u)
        dsts.append(v)
        if not g.kind.directed:
            srcs.append(v)
            dsts.append(u)
    srcs = np.asarray(srcs, dtype=np.int64)
    dsts = np.asarray(dsts, dtype=np.int64)
    out_deg = np.bincount(srcs, minlength=n).astype(np.float64)
    dangling = out_deg == 0
    safe_deg = np.where(dangling, 1.0, out_deg)

    x = np.full(n, 1.0 / n, dtype=np.float64)
    iterations = 0
    converged = False
    for _ in range(max_iterations):
        share = x / safe_deg
        nxt = np.zeros(n, dtype=np.float64)
        np.add.at(nxt, dsts, share[srcs])
        loose = x[dangling].sum()
        nxt = (1.0 - damping) / n + damping * (nxt + loose / n)
        delta = float(np.abs(nxt - x).sum())
        x = nxt
        iterations += 1
        if delta < tolerance:
            converged = True
            break
    return ScoreMap(
        {v: float(x[i]) for v, i in index.items()}, iterations, converged
    )


def betweenness(g: Graph) -> ScoreMap:
    """Brandes betweenness (unnormalized pair-dependency sums).

    Uses the BFS stage on unweighted graphs and the Dijkstra stage on
    weighted ones (weights must be positive for the path counts to be
    well defined).  On undirected graphs each unordered pair contributes
    once.
    """
    verts = g.vertex_list()
    bc = {v: 0.0 for v in verts}
    weighted = g.kind.weighted
    for s in verts:
        if weighted:
            order, sigma, preds = _brandes_dijkstra(g, s)
        else:
            order, sigma, preds = _brandes_bfs(g, s)
        delta = {v: 0.0 for v in order}
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    if not g.kind.directed:
        for v in bc:
            bc[v] /= 2.0
    return ScoreMap(bc)


def _brandes_bfs(g: Graph, s):
    dist = {s: 0}
    sigma = {s: 1.0}
    preds = {s: []}
    order = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        for e in g.out_edges_of(v):
            w = g.opposite(e, v)
            if w == v:
                continue
            if w not in dist:
                dist[w] = dist[v] + 1
                sigma[w] = 0.0
                preds[w] = []
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, sigma, preds


def _brandes_dijkstra(g: Graph, s):
    dist: dict = {}
    sigma = {s: 1.0}
    preds = {s: []}
    order = []
    heap = DAryHeap()
    heap.insert(s, 0.0)
    tentative = {s: 0.0}
    while heap:
        v, dv = heap.pop_min()
        dist[v] = dv
        order.append(v)
        for e in g.out_edges_of(v):
            w = g.edge_weight(e)
            if w < 0:
                raise NegativeWeightError(f"negative weight {w} on edge {e!r}", edge=e)
            u = g.opposite(e, v)
            if u == v or u in dist:
                continue
            nd = dv + w
            old = tentative.get(u)
            if old is None or nd < old:
                tentative[u] = nd
                heap.update(u, nd)
                sigma[u] = sigma[v]
                preds[u] = [v]
            elif nd == old:
                sigma[u] += sigma[v]
                preds[u].append(v)
    return order, sigma, preds


def _sssp_distances(g: Graph, s) -> dict:
    if not g.kind.weighted:
        dist = {s: 0.0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in g.out_edges_of(v):
                w = g.opposite(e, v)
                if w not in dist:
                    dist[w] = dist[v] + 1.0
                    queue.append(w)
        return dist
    from .shortest_paths import dijkstra

    return dijkstra(g, s).dist


def closeness(g: Graph) -> ScoreMap:
    """Classic closeness: (n-1) / sum of distances to all other vertices.

    Vertices that cannot reach the whole graph score 0 (the sum is
    infinite); a single-vertex graph scores 0 by convention.
    """
    verts = g.vertex_list()
    n = len(verts)
    scores = {}
    for v in verts:
        dist = _sssp_distances(g, v)
        if len(dist) < n or n < 2:
            scores[v] = 0.0
        else:
            total = sum(dist.values())
            scores[v] = (n - 1) / total if total > 0 else 0.0
    return ScoreMap(scores)


def harmonic(g: Graph) -> ScoreMap:
    """Harmonic centrality: sum of reciprocal distances (1/inf = 0)."""
    scores = {}
    for v in g.vertices():
        dist = _sssp_distances(g, v)
        scores[v] = sum(1.0 / d for u, d in dist.items() if u != v and d > 0)
    return ScoreMap(scores)


def coreness(g: Graph) -> ScoreMap:
    """k-core numbers by bucketed minimum-degree peeling.

    The peeling degree counts incident non-loop edges (parallel edges
    count, self-loops are ignored).
    """
    require_undirected(g, "coreness")
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in g.edges():
        a, b = index[g.edge_source(e)], index[g.edge_target(e)]
        if a == b:
            continue
        adj[a].append(b)
        adj[b].append(a)
    deg = [len(a) for a in adj]
    if n == 0:
        return ScoreMap({})

    max_deg = max(deg)
    # counting-sort vertices by degree; ties keep insertion order
    bins = [0] * (max_deg + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(max_deg + 1):
        bins[d], start = start, start + bins[d]
    pos = [0] * n
    vert = [0] * n
    for i in range(n):
        pos[i] = bins[deg[i]]
        vert[pos[i]] = i
        bins[deg[i]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    core = deg[:]
    for i in range(n):
        v = vert[i]
        for u in adj[v]:
            if core[u] > core[v]:
                # swap u to the front of its bucket, then shrink its degree
                du = core[u]
                pu, pw = pos[u], bins[du]
                w = vert[pw]
                if u != w:
                    vert[pu], vert[pw] = w, u
                    pos[u], pos[w] = pw, pu
                bins[du] += 1
                core[u] -= 1
    return ScoreMap({verts[i]: int(core[i]) for i in range(n)})
