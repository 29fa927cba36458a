"""Maximum flow / minimum cut algorithms and cut trees.

Three max-flow engines (Edmonds-Karp, Dinic, highest-label Push-Relabel
with the gap heuristic) share one residual-network representation and one
result contract.  Undirected edges are modelled as two opposite arcs that
share capacity, so per-edge flow on an undirected edge is reported signed
relative to its storage orientation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import Graph, Vertex, require_undirected
from .errors import GraphError
from .shortest_paths import INF


@dataclass
class FlowResult:
    """A feasible s-t flow of maximum value.

    ``edge_flow`` maps every original edge to the flow it carries; for
    undirected edges the value is signed (negative = against the stored
    orientation).
    """

    value: float
    edge_flow: dict
    source: Vertex
    sink: Vertex


@dataclass
class CutResult:
    """A vertex partition and the total weight crossing it."""

    source_side: list
    other_side: list
    weight: float


class _Residual:
    """Arc-pair residual network over integer vertex ids."""

    __slots__ = ("n", "head", "cap", "flow", "first", "nxt", "pair_of_edge")

    def __init__(self, g: Graph, index: dict):
        self.n = len(index)
        self.head: list[int] = []
        self.cap: list[float] = []
        self.flow: list[float] = []
        self.first: list[list[int]] = [[] for _ in range(self.n)]
        self.pair_of_edge: list[tuple[int, bool]] = []  # (arc id, undirected?)
        directed = g.kind.directed
        for e in g.edges():
            u, v = index[g.edge_source(e)], index[g.edge_target(e)]
            c = g.edge_weight(e)
            if c < 0:
                raise GraphError(f"negative capacity {c} on edge {e!r}")
            a = len(self.head)
            self._arc(u, v, c)
            self._arc(v, u, c if not directed else 0.0)
            self.pair_of_edge.append((a, not directed))

    def _arc(self, u, v, c):
        self.first[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(float(c))
        self.flow.append(0.0)

    def residual(self, a: int) -> float:
        return self.cap[a] - self.flow[a]

    def push(self, a: int, amount: float) -> None:
        self.flow[a] += amount
        self.flow[a ^ 1] -= amount

    def reachable_from(self, s: int) -> list[int]:
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        order = [s]
        while queue:
            v = queue.popleft()
            for a in self.first[v]:
                w = self.head[a]
                if not seen[w] and self.residual(a) > 1e-12:
                    seen[w] = True
                    order.append(w)
                    queue.append(w)
        return order


def _prepare(g: Graph, s, t):
    g._require_vertex(s)
    g._require_vertex(t)
    if s == t:
        raise GraphError("source and sink must differ")
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    return verts, index, _Residual(g, index)


def _finish(g: Graph, res: _Residual, value, s, t) -> FlowResult:
    # the paired arcs keep flow[a] == -flow[a^1], so flow[a] is already the
    # net signed flow for undirected edges
    edge_flow = {}
    for e, (a, _) in zip(g.edges(), res.pair_of_edge):
        edge_flow[e] = res.flow[a]
    return FlowResult(value, edge_flow, s, t)


def _edmonds_karp(res: _Residual, s: int, t: int) -> float:
    total = 0.0
    while True:
        via = [-1] * res.n  # arc that discovered each vertex
        via[s] = -2
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if v == t:
                break
            for a in res.first[v]:
                w = res.head[a]
                if via[w] == -1 and res.residual(a) > 0:
                    via[w] = a
                    queue.append(w)
        if via[t] == -1:
            return total
        bottleneck = INF
        v = t
        while v != s:
            a = via[v]
            bottleneck = min(bottleneck, res.residual(a))
            v = res.head[a ^ 1]
        v = t
        while v != s:
            a = via[v]
            res.push(a, bottleneck)
            v = res.head[a ^ 1]
        total += bottleneck


def _dinic(res: _Residual, s: int, t: int) -> float:
    total = 0.0
    n = res.n
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for a in res.first[v]:
                w = res.head[a]
                if level[w] == -1 and res.residual(a) > 0:
                    level[w] = level[v] + 1
                    queue.append(w)
        if level[t] == -1:
            return total
        ptr = [0] * n
        total += _dinic_blocking_flow(res, s, t, level, ptr)


def _dinic_blocking_flow(res: _Residual, s: int, t: int, level, ptr) -> float:
    """Iterative DFS that saturates the level graph (no recursion)."""
    total = 0.0
    path: list[int] = []  # arc stack
    v = s
    while True:
        if v == t:
            bottleneck = min(res.residual(a) for a in path)
            for a in path:
                res.push(a, bottleneck)
            total += bottleneck
            for i, a in enumerate(path):  # retreat behind the first saturated arc
                if res.residual(a) <= 0:
                    del path[i:]
                    break
            v = res.head[path[-1]] if path else s
            continue
        moved = False
        while ptr[v] < len(res.first[v]):
            a = res.first[v][ptr[v]]
            w = res.head[a]
            if res.residual(a) > 0 and level[w] == level[v] + 1:
                path.append(a)
                v = w
                moved = True
                break
            ptr[v] += 1
        if moved:
            continue
        if v == s:
            return total
        level[v] = -1  # dead end: prune from the level graph
        a = path.pop()
        v = res.head[a ^ 1]
        ptr[v] += 1


def _push_relabel(res: _Residual, s: int, t: int) -> float:
    """Highest-label selection with the gap heuristic."""
    n = res.n
    height = [0] * n
    excess = [0.0] * n
    count = [0] * (2 * n + 1)  # nodes per height, for gap detection
    count[0] = n
    buckets: list[list[int]] = [[] for _ in range(2 * n + 1)]
    active = [False] * n
    highest = 0

    def activate(v: int) -> None:
        nonlocal highest
        if not active[v] and excess[v] > 0 and v != s and v != t:
            active[v] = True
            buckets[height[v]].append(v)
            if height[v] > highest:
                highest = height[v]

    # saturate every arc out of the source
    count[0] -= 1
    count[n] += 1
    height[s] = n
    for a in res.first[s]:
        amount = res.residual(a)
        if amount > 0:
            excess[res.head[a]] += amount
            excess[s] -= amount
            res.push(a, amount)
            activate(res.head[a])

    while highest >= 0:
        if not buckets[highest]:
            highest -= 1
            continue
        v = buckets[highest].pop()
        if not active[v]:
            continue
        if height[v] != highest:  # stale after a gap lift: re-file
            buckets[height[v]].append(v)
            if height[v] > highest:
                highest = height[v]
            continue
        active[v] = False
        # discharge v completely
        while excess[v] > 0:
            pushed_any = False
            for a in res.first[v]:
                if excess[v] <= 0:
                    break
                w = res.head[a]
                r = res.residual(a)
                if r > 0 and height[v] == height[w] + 1:
                    amount = min(excess[v], r)
                    res.push(a, amount)
                    excess[v] -= amount
                    excess[w] += amount
                    activate(w)
                    pushed_any = True
            if excess[v] <= 0:
                break
            if not pushed_any:
                # relabel, with gap heuristic
                old = height[v]
                min_h = 2 * n
                for a in res.first[v]:
                    if res.residual(a) > 0:
                        min_h = min(min_h, height[res.head[a]])
                new_h = min(min_h + 1, 2 * n)
                count[old] -= 1
                if count[old] == 0 and 0 < old < n:
                    # heights (old, n) are unreachable: lift them past n
                    for u in range(n):
                        if old < height[u] < n and u != s:
                            count[height[u]] -= 1
                            height[u] = n + 1
                            count[n + 1] += 1
                height[v] = new_h
                count[new_h] += 1
                if new_h >= 2 * n:
                    break
        if excess[v] > 0 and height[v] < 2 * n:
            activate(v)
    return excess[t]


_MAXFLOW = {
    "edmonds_karp": _edmonds_karp,
    "dinic": _dinic,
    "push_relabel": _push_relabel,
}


def max_flow(g: Graph, s: Vertex, t: Vertex, algorithm: str = "push_relabel") -> FlowResult:
    """Maximum s-t flow; the three algorithms agree exactly on integer data."""
    try:
        engine = _MAXFLOW[algorithm]
    except KeyError:
        raise ValueError(f"unknown max-flow algorithm {algorithm!r}") from None
    _, index, res = _prepare(g, s, t)
    value = engine(res, index[s], index[t])
    return _finish(g, res, value, s, t)


def min_st_cut(g: Graph, s: Vertex, t: Vertex, algorithm: str = "push_relabel") -> CutResult:
    """Minimum s-t cut: the residual-reachable side after a max flow."""
    try:
        engine = _MAXFLOW[algorithm]
    except KeyError:
        raise ValueError(f"unknown max-flow algorithm {algorithm!r}") from None
    verts, index, res = _prepare(g, s, t)
    engine(res, index[s], index[t])
    inside = set(res.reachable_from(index[s]))
    s_side = [verts[i] for i in range(len(verts)) if i in inside]
    t_side = [verts[i] for i in range(len(verts)) if i not in inside]
    weight = 0.0
    for e in g.edges():
        u, v = index[g.edge_source(e)], index[g.edge_target(e)]
        if (u in inside) != (v in inside):
            if g.kind.directed and u not in inside:
                continue  # only arcs leaving the source side count
            weight += g.edge_weight(e)
    return CutResult(s_side, t_side, weight)


def stoer_wagner_min_cut(g: Graph) -> CutResult:
    """Global minimum cut of an undirected non-negatively weighted graph.

    Runs n-1 maximum-adjacency phases, contracting the two last-added
    vertices each time.  A disconnected graph yields a weight-0 cut.
    """
    require_undirected(g, "stoer_wagner_min_cut")
    verts = g.vertex_list()
    n = len(verts)
    if n < 2:
        raise GraphError("global min cut needs at least two vertices")
    index = {v: i for i, v in enumerate(verts)}
    w = np.zeros((n, n), dtype=np.float64)
    for e in g.edges():
        u, v = index[g.edge_source(e)], index[g.edge_target(e)]
        if u == v:
            continue
        c = g.edge_weight(e)
        if c < 0:
            raise GraphError(f"negative weight {c} on edge {e!r}")
        w[u, v] += c
        w[v, u] += c

    merged = [[i] for i in range(n)]
    alive = list(range(n))
    best_weight = INF
    best_group: list[int] = []

    while len(alive) > 1:
        # maximum adjacency search; ties resolved towards earlier vertices
        a = [alive[0]]
        conn = {v: w[alive[0], v] for v in alive[1:]}
        while len(a) < len(alive):
            nxt, best = None, -1.0
            for v, c in conn.items():
                if c > best:
                    nxt, best = v, c
            a.append(nxt)
            del conn[nxt]
            for v in conn:
                conn[v] += w[nxt, v]
        last, before = a[-1], a[-2]
        cut_of_phase = float(sum(w[last, v] for v in alive if v != last))
        if cut_of_phase < best_weight:
            best_weight = cut_of_phase
            best_group = list(merged[last])
        # contract last into before
        for v in alive:
            if v not in (last, before):
                w[before, v] += w[last, v]
                w[v, before] = w[before, v]
        merged[before].extend(merged[last])
        alive.remove(last)

    group = set(best_group)
    side_a = [verts[i] for i in range(n) if i in group]
    side_b = [verts[i] for i in range(n) if i not in group]
    return CutResult(side_a, side_b, best_weight)


@dataclass
class GomoryHuTree:
    """Cut tree: for any pair, the minimum edge on the tree path equals the
    graph's minimum s-t cut value."""

    tree: Graph  # undirected weighted tree over the original vertices

    def min_cut_value(self, s, t) -> float:
        parent = {s: (None, 0.0)}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if v == t:
                break
            for e in self.tree.edges_of(v):
                u = self.tree.opposite(e, v)
                if u not in parent:
                    parent[u] = (v, self.tree.edge_weight(e))
                    queue.append(u)
        bottleneck = INF
        v = t
        while parent[v][0] is not None:
            bottleneck = min(bottleneck, parent[v][1])
            v = parent[v][0]
        return bottleneck

    def global_min_cut_value(self) -> float:
        return min(self.tree.edge_weight(e) for e in self.tree.edges())


def gomory_hu(g: Graph, algorithm: str = "push_relabel") -> GomoryHuTree:
    """Gusfield's cut tree: n-1 max-flow calls, no contractions."""
    require_undirected(g, "gomory_hu")
    verts = g.vertex_list()
    if len(verts) < 2:
        raise GraphError("cut tree needs at least two vertices")
    root = verts[0]
    parent = {v: root for v in verts[1:]}
    cut_value: dict = {}

    for v in verts[1:]:
        p = parent[v]
        cut = min_st_cut(g, v, p, algorithm=algorithm)
        cut_value[v] = cut.weight
        inside = set(cut.source_side)
        for u in verts[1:]:
            if u != v and parent[u] == p and u in inside:
                parent[u] = v  # siblings on v's side become v's children
        if p != root and parent[p] in inside:
            # v slides between p and its grandparent
            parent[v] = parent[p]
            parent[p] = v
            cut_value[v] = cut_value[p]
            cut_value[p] = cut.weight

    from .core import GraphBuilderSpec, build_graph

    tree = build_graph(GraphBuilderSpec(weighted=True))
    for v in verts:
        tree.add_vertex(v)
    for v in verts[1:]:
        tree.add_edge(v, parent[v], weight=cut_value[v])
    return GomoryHuTree(tree)
