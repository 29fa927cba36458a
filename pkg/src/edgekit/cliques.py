"""Maximal clique enumeration: Bron-Kerbosch with pivoting, plus the
degeneracy-ordered outer loop for sparse graphs."""

from __future__ import annotations

from typing import Iterator

from .core import Graph, require_undirected


def _index_sets(g: Graph):
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    nbr: list[set] = [set() for _ in verts]
    for e in g.edges():
        a, b = index[g.edge_source(e)], index[g.edge_target(e)]
        if a != b:
            nbr[a].add(b)
            nbr[b].add(a)
    return verts, nbr


def degeneracy_ordering(g: Graph) -> tuple[list, int]:
    """Repeated minimum-degree removal; returns (order, degeneracy).

    Ties are broken by insertion order, making the order reproducible.
    """
    require_undirected(g, "degeneracy_ordering")
    verts, nbr = _index_sets(g)
    n = len(verts)
    deg = [len(s) for s in nbr]
    removed = [False] * n
    order = []
    degeneracy = 0
    for _ in range(n):
        best = -1
        for i in range(n):
            if not removed[i] and (best == -1 or deg[i] < deg[best]):
                best = i
        removed[best] = True
        degeneracy = max(degeneracy, deg[best])
        order.append(best)
        for u in nbr[best]:
            if not removed[u]:
                deg[u] -= 1
    return [verts[i] for i in order], degeneracy


def maximal_cliques(g: Graph, variant: str = "pivot") -> Iterator[list]:
    """Stream every maximal clique exactly once.

    ``pivot`` is Bron-Kerbosch with the max-|P & N(u)| pivot rule;
    ``degeneracy`` wraps the same recursion in a degeneracy-ordered outer
    loop.  Cliques come out as vertex lists sorted by insertion order.
    """
    require_undirected(g, "maximal_cliques")
    verts, nbr = _index_sets(g)
    n = len(verts)

    def emit(clique: list[int]) -> list:
        return [verts[i] for i in sorted(clique)]

    def bk(r: list[int], p: set, x: set):
        if not p and not x:
            yield emit(r)
            return
        pivot = -1
        best = -1
        for u in sorted(p | x):  # ties fall to the smallest index
            score = len(p & nbr[u])
            if score > best:
                pivot, best = u, score
        for v in sorted(p - nbr[pivot]):
            yield from bk(r + [v], p & nbr[v], x & nbr[v])
            p.remove(v)
            x.add(v)

    if variant == "pivot":
        yield from bk([], set(range(n)), set())
    elif variant == "degeneracy":
        payload_order, _ = degeneracy_ordering(g)
        index = {v: i for i, v in enumerate(verts)}
        order = [index[v] for v in payload_order]
        rank = {v: i for i, v in enumerate(order)}
        for v in order:
            later = {u for u in nbr[v] if rank[u] > rank[v]}
            earlier = {u for u in nbr[v] if rank[u] < rank[v]}
            yield from bk([v], later, earlier)
    else:
        raise ValueError(f"unknown clique variant {variant!r}")


def clique_number(g: Graph) -> int:
    """Size of the largest clique (by full enumeration)."""
    return max((len(c) for c in maximal_cliques(g)), default=0)
