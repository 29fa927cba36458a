"""Single-source, point-to-point, k-shortest and all-pairs shortest paths.

Dijkstra (and its bidirectional and A* relatives) run on a 4-ary heap with
decrease-key.  Unreachable targets are reported as ``None`` path results or
absent tree entries, never as sentinel floats that could silently propagate
through arithmetic; the all-pairs matrix is the one place where +inf is the
documented encoding of "no path".
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .core import Graph, Vertex
from .errors import NegativeCycleError, NegativeWeightError
from .heaps import DAryHeap

INF = math.inf


@dataclass
class PathResult:
    """A walk: consecutive vertices joined by the listed edges."""

    vertices: list
    edges: list
    weight: float

    def __len__(self) -> int:
        return len(self.edges)


@dataclass
class SsspTree:
    """Shortest-path tree: distances and predecessor edges per reached vertex."""

    source: Vertex
    dist: dict
    pred: dict  # vertex -> (parent, edge); source absent
    graph: Graph

    def reached(self, v) -> bool:
        return v in self.dist

    def distance(self, v) -> float:
        return self.dist.get(v, INF)

    def path_to(self, v) -> PathResult | None:
        if v not in self.dist:
            return None
        verts, edges = [v], []
        while v != self.source:
            parent, e = self.pred[v]
            edges.append(e)
            verts.append(parent)
            v = parent
        verts.reverse()
        edges.reverse()
        return PathResult(verts, edges, self.dist[verts[-1]])


def _edge_weight_checked(g: Graph, e) -> float:
    w = g.edge_weight(e)
    if w < 0:
        raise NegativeWeightError(f"negative weight {w} on edge {e!r}", edge=e)
    return w


def dijkstra(g: Graph, source: Vertex, target: Vertex | None = None):
    """Shortest paths from ``source`` (weights must be non-negative).

    Returns the full :class:`SsspTree`, or with ``target`` given stops as
    soon as the target settles and returns a :class:`PathResult` (``None``
    when unreachable).
    """
    g._require_vertex(source)
    if target is not None:
        g._require_vertex(target)
    dist: dict = {}
    pred: dict = {}
    heap = DAryHeap()
    heap.insert(source, 0.0)
    while heap:
        v, dv = heap.pop_min()
        dist[v] = dv
        if v == target:
            break
        for e in g.out_edges_of(v):
            w = _edge_weight_checked(g, e)
            u = g.opposite(e, v)
            if u in dist:
                continue
            nd = dv + w
            if heap.update(u, nd):
                pred[u] = (v, e)
    tree = SsspTree(source, dist, pred, g)
    return tree if target is None else tree.path_to(target)


def bidirectional_dijkstra(g: Graph, source: Vertex, target: Vertex) -> PathResult | None:
    """Point-to-point Dijkstra growing two balls that meet in the middle."""
    g._require_vertex(source)
    g._require_vertex(target)
    if source == target:
        return PathResult([source], [], 0.0)

    settled = ({}, {})  # forward, backward
    tent = ({source: 0.0}, {target: 0.0})  # best-known values incl. queued
    pred = ({}, {})
    heaps = (DAryHeap(), DAryHeap())
    heaps[0].insert(source, 0.0)
    heaps[1].insert(target, 0.0)
    best = INF
    meet = None

    def expand(side: int) -> None:
        nonlocal best, meet
        v, dv = heaps[side].pop_min()
        settled[side][v] = dv
        edges = g.out_edges_of(v) if side == 0 else g.in_edges_of(v)
        for e in edges:
            w = _edge_weight_checked(g, e)
            u = g.opposite(e, v)
            if u in settled[side]:
                continue
            nd = dv + w
            if nd < tent[side].get(u, INF):
                tent[side][u] = nd
                pred[side][u] = (v, e)
                heaps[side].update(u, nd)
            # meeting-point candidate uses tentative values of both sides
            other = tent[1 - side].get(u)
            if other is not None and tent[side][u] + other < best:
                best = tent[side][u] + other
                meet = u

    while heaps[0] and heaps[1]:
        if heaps[0].peek_key() + heaps[1].peek_key() >= best:
            break
        if heaps[0].peek_key() <= heaps[1].peek_key():
            expand(0)
        else:
            expand(1)

    if meet is None:
        return None
    fwd = _walk_back(meet, source, pred[0])
    bwd = _walk_back(meet, target, pred[1])
    verts = fwd[0] + list(reversed(bwd[0][:-1]))
    edges = fwd[1] + list(reversed(bwd[1]))
    return PathResult(verts, edges, tent[0][meet] + tent[1][meet])


def _walk_back(v, stop, pred):
    verts, edges = [v], []
    while v != stop:
        parent, e = pred[v]
        verts.append(parent)
        edges.append(e)
        v = parent
    verts.reverse()
    edges.reverse()
    return verts, edges


def bellman_ford(g: Graph, source: Vertex) -> SsspTree:
    """Single-source shortest paths tolerating negative weights.

    Raises :class:`NegativeCycleError` (with an edge-sequence witness) when
    a negative cycle is reachable from ``source``.
    """
    g._require_vertex(source)
    dist = {source: 0.0}
    pred: dict = {}
    arcs = _relaxable_arcs(g)
    n = g.vertex_count
    for _ in range(max(n - 1, 0)):
        changed = False
        for u, v, w, e in arcs:
            du = dist.get(u)
            if du is None:
                continue
            nd = du + w
            if nd < dist.get(v, INF):
                dist[v] = nd
                pred[v] = (u, e)
                changed = True
        if not changed:
            break
    else:
        changed = True
    if changed:
        for u, v, w, e in arcs:
            du = dist.get(u)
            if du is not None and du + w < dist.get(v, INF):
                pred[v] = (u, e)
                raise NegativeCycleError(
                    "negative cycle reachable from source", _extract_cycle(v, pred, n)
                )
    return SsspTree(source, dist, pred, g)


def _relaxable_arcs(g: Graph):
    arcs = []
    for e in g.edges():
        u, v, w = g.edge_source(e), g.edge_target(e), g.edge_weight(e)
        arcs.append((u, v, w, e))
        if not g.kind.directed and u != v:
            arcs.append((v, u, w, e))
    return arcs


def _extract_cycle(v, pred, n):
    for _ in range(n):  # walk far enough back to be inside the cycle
        v = pred[v][0]
    cycle_edges = []
    start = v
    while True:
        parent, e = pred[v]
        cycle_edges.append(e)
        v = parent
        if v == start:
            break
    cycle_edges.reverse()
    return cycle_edges


@dataclass
class DistanceMatrix:
    """All-pairs distances; +inf encodes "no path"."""

    vertices: list
    index: dict = field(repr=False)
    array: np.ndarray = field(repr=False)

    def distance(self, u, v) -> float:
        return float(self.array[self.index[u], self.index[v]])


def _potentials(g: Graph) -> dict:
    """Bellman-Ford from a virtual zero-weight super source; the resulting
    vertex potentials turn every weight non-negative.  Raises with a witness
    on any negative cycle."""
    h = {v: 0.0 for v in g.vertices()}
    pred: dict = {}
    arcs = _relaxable_arcs(g)
    n = g.vertex_count
    changed = n > 0
    for _ in range(max(n - 1, 0)):
        changed = False
        for u, v, w, e in arcs:
            if h[u] + w < h[v]:
                h[v] = h[u] + w
                pred[v] = (u, e)
                changed = True
        if not changed:
            break
    if changed:
        for u, v, w, e in arcs:
            if h[u] + w < h[v]:
                pred[v] = (u, e)
                raise NegativeCycleError("negative cycle", _extract_cycle(v, pred, n))
    return h


def johnson_apsp(g: Graph) -> DistanceMatrix:
    """All-pairs shortest paths: reweight by potentials, then n Dijkstras."""
    h = _potentials(g)
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    out = np.full((n, n), INF, dtype=np.float64)

    for s in verts:
        si = index[s]
        settled: dict = {}
        heap = DAryHeap()
        heap.insert(s, 0.0)
        while heap:
            v, dv = heap.pop_min()
            settled[v] = dv
            for e in g.out_edges_of(v):
                u = g.opposite(e, v)
                if u in settled:
                    continue
                w = g.edge_weight(e) + h[v] - h[u]  # non-negative by construction
                heap.update(u, dv + w)
        for v, dv in settled.items():
            out[si, index[v]] = dv - h[s] + h[v]
    return DistanceMatrix(verts, index, out)


def floyd_warshall(g: Graph) -> DistanceMatrix:
    """All-pairs shortest paths by dynamic programming over the dense matrix."""
    _potentials(g)  # pure negative-cycle guard (cheap next to the n^3 sweep)
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    d = np.full((n, n), INF, dtype=np.float64)
    np.fill_diagonal(d, 0.0)
    for e in g.edges():
        u, v, w = index[g.edge_source(e)], index[g.edge_target(e)], g.edge_weight(e)
        if w < d[u, v]:
            d[u, v] = w
        if not g.kind.directed and w < d[v, u]:
            d[v, u] = w
    for k in range(n):
        np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :], out=d)
    return DistanceMatrix(verts, index, d)


def astar(g: Graph, source: Vertex, target: Vertex, heuristic) -> PathResult | None:
    """A* search; ``heuristic(v, target)`` estimates remaining cost.

    With an admissible heuristic the returned weight equals Dijkstra's
    (settled vertices are re-opened if a cheaper route appears, so mere
    admissibility suffices).  An inadmissible heuristic may yield a
    suboptimal path; no optimality is promised then.
    """
    g._require_vertex(source)
    g._require_vertex(target)
    gcost = {source: 0.0}
    pred: dict = {}
    counter = itertools.count()
    open_heap = [(float(heuristic(source, target)), next(counter), source, 0.0)]
    while open_heap:
        _, _, v, gv = heapq.heappop(open_heap)
        if gv > gcost.get(v, INF):
            continue  # stale entry superseded by a cheaper route
        if v == target:
            verts, edges = _walk_back(target, source, pred)
            return PathResult(verts, edges, gcost[target])
        for e in g.out_edges_of(v):
            w = _edge_weight_checked(g, e)
            u = g.opposite(e, v)
            nd = gv + w
            if nd < gcost.get(u, INF):
                gcost[u] = nd
                pred[u] = (v, e)
                heapq.heappush(
                    open_heap, (nd + float(heuristic(u, target)), next(counter), u, nd)
                )
    return None


def yen_k_shortest(g: Graph, source: Vertex, target: Vertex, k: int) -> list[PathResult]:
    """Up to ``k`` loopless shortest paths in nondecreasing weight order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    from .views import as_subgraph

    best = dijkstra(g, source, target)
    if best is None:
        return []
    found = [best]
    seen_keys = {tuple(best.vertices)}
    candidates: list = []  # heap of (weight, seq, PathResult)
    counter = itertools.count()

    while len(found) < k:
        prev = found[-1]
        for j in range(len(prev.vertices) - 1):
            spur = prev.vertices[j]
            root_verts = prev.vertices[: j + 1]
            root_edges = prev.edges[:j]
            root_weight = sum(g.edge_weight(e) for e in root_edges)

            banned_edges = set()
            for p in found:
                if p.vertices[: j + 1] == root_verts and len(p.edges) > j:
                    banned_edges.add(p.edges[j])
            banned_verts = set(root_verts[:-1])

            view = as_subgraph(
                g,
                vertex_filter=lambda v: v not in banned_verts,
                edge_filter=lambda e: e not in banned_edges,
            )
            spur_path = dijkstra(view, spur, target)
            if spur_path is None:
                continue
            verts = root_verts[:-1] + spur_path.vertices
            key = tuple(verts)
            if key in seen_keys:
                continue
            seen_keys.add(key)
            cand = PathResult(
                verts, root_edges + spur_path.edges, root_weight + spur_path.weight
            )
            heapq.heappush(candidates, (cand.weight, next(counter), cand))
        if not candidates:
            break
        _, _, nxt = heapq.heappop(candidates)
        found.append(nxt)
    return found


@dataclass
class GraphMeasures:
    """Distance-derived summary: eccentricities and the derived sets."""

    eccentricity: dict
    diameter: float
    radius: float
    center: list
    periphery: list


def graph_measures(g: Graph) -> GraphMeasures:
    """Eccentricity per vertex plus diameter, radius, center and periphery.

    Defined through shortest-path distance; disconnected graphs yield
    infinite eccentricities (cross-component distances are infinite).
    """
    verts = g.vertex_list()
    if not verts:
        return GraphMeasures({}, 0.0, 0.0, [], [])
    n = len(verts)
    ecc: dict = {}
    for v in verts:
        tree = dijkstra(g, v)
        ecc[v] = max(tree.dist.values()) if len(tree.dist) == n else INF
    diameter = max(ecc.values())
    radius = min(ecc.values())
    return GraphMeasures(
        ecc,
        diameter,
        radius,
        [v for v in verts if ecc[v] == radius],
        [v for v in verts if ecc[v] == diameter],
    )
