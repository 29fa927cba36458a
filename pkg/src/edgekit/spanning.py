"""Minimum spanning trees/forests: Prim, Kruskal and Boruvka.

All three share one result contract and one deterministic tie-break rule
(equal weights resolved by edge insertion order), so each algorithm is
reproducible on its own even when the optimum is not unique.  Disconnected
input yields a spanning forest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, require_undirected
from .heaps import DAryHeap


class UnionFind:
    """Disjoint sets with union-by-rank and path compression."""

    def __init__(self, elements=()):
        self._parent: dict = {}
        self._rank: dict = {}
        for x in elements:
            self.make_set(x)

    def make_set(self, x) -> None:
        if x not in self._parent:
            self._parent[x] = x
            self._rank[x] = 0

    def find(self, x):
        parent = self._parent
        if x not in parent:
            raise KeyError(f"{x!r} was never registered with make_set")
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self._rank[rx] < self._rank[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        if self._rank[rx] == self._rank[ry]:
            self._rank[rx] += 1
        return True

    def connected(self, x, y) -> bool:
        return self.find(x) == self.find(y)

    def __len__(self) -> int:
        return len(self._parent)


@dataclass
class SpanningForest:
    """Acyclic edge set spanning every component, with its total weight."""

    edges: list
    weight: float

    def __len__(self) -> int:
        return len(self.edges)


def kruskal(g: Graph) -> SpanningForest:
    require_undirected(g, "minimum spanning tree")
    ranked = sorted(g.edges(), key=lambda e: (g.edge_weight(e), g.edge_index(e)))
    uf = UnionFind(g.vertices())
    chosen = []
    total = 0.0
    for e in ranked:
        if uf.union(g.edge_source(e), g.edge_target(e)):
            chosen.append(e)
            total += g.edge_weight(e)
    return SpanningForest(chosen, total)


def prim(g: Graph) -> SpanningForest:
    """Prim's algorithm on the same 4-ary heap Dijkstra uses."""
    require_undirected(g, "minimum spanning tree")
    in_tree: dict = {}
    best_edge: dict = {}
    chosen = []
    total = 0.0
    for root in g.vertices():
        if root in in_tree:
            continue
        heap = DAryHeap()
        heap.insert(root, 0.0)
        best_edge[root] = None
        while heap:
            v, _ = heap.pop_min()
            in_tree[v] = None
            e = best_edge[v]
            if e is not None:
                chosen.append(e)
                total += g.edge_weight(e)
            for f in g.edges_of(v):
                u = g.opposite(f, v)
                if u in in_tree:
                    continue
                if heap.update(u, g.edge_weight(f)):
                    best_edge[u] = f
    return SpanningForest(chosen, total)


def boruvka(g: Graph) -> SpanningForest:
    require_undirected(g, "minimum spanning tree")
    uf = UnionFind(g.vertices())
    chosen = []
    total = 0.0
    while True:
        cheapest: dict = {}  # component root -> (weight, index, edge)
        for e in g.edges():
            u, v = g.edge_source(e), g.edge_target(e)
            ru, rv = uf.find(u), uf.find(v)
            if ru == rv:
                continue
            cand = (g.edge_weight(e), g.edge_index(e), e)
            if ru not in cheapest or cand[:2] < cheapest[ru][:2]:
                cheapest[ru] = cand
            if rv not in cheapest or cand[:2] < cheapest[rv][:2]:
                cheapest[rv] = cand
        if not cheapest:
            break
        merged_any = False
        for w, _, e in cheapest.values():
            if uf.union(g.edge_source(e), g.edge_target(e)):
                chosen.append(e)
                total += w
                merged_any = True
        if not merged_any:
            break
    return SpanningForest(chosen, total)


_MST_ALGORITHMS = {"prim": prim, "kruskal": kruskal, "boruvka": boruvka}


def mst(g: Graph, algorithm: str = "kruskal") -> SpanningForest:
    """Minimum spanning forest by the named algorithm.

    The three algorithms always agree on total weight; with all-distinct
    weights they return the identical edge set.
    """
    try:
        run = _MST_ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown MST algorithm {algorithm!r}") from None
    return run(g)
