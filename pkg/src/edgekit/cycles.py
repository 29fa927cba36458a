"""Simple-cycle enumeration and cycle-space bases.

Cycle enumeration follows Johnson's blocked-search algorithm over one
strongly connected component at a time.  Cycle bases are fundamental bases
derived from a spanning forest; three tree-growing disciplines are offered
(Paton's stack-driven variant, BFS and DFS trees).  Basis members are edge
sets represented as lists, one per non-tree edge, so GF(2) independence is
structural.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph, require_directed, require_undirected


@dataclass
class CycleBasis:
    """Independent generating set of the Eulerian-subgraph space."""

    members: list[list]

    @property
    def dimension(self) -> int:
        return len(self.members)


def enumerate_simple_cycles(g: Graph) -> list[list]:
    """Every simple directed cycle exactly once (up to rotation).

    Vertex cycles are reported (parallel arcs do not multiply the output);
    a self-loop contributes the one-vertex cycle ``[v]``.
    """
    require_directed(g, "enumerate_simple_cycles")
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj: list[list[int]] = [[] for _ in range(n)]
    loops: list[int] = []
    seen_arc: set = set()
    for e in g.edges():
        a, b = index[g.edge_source(e)], index[g.edge_target(e)]
        if a == b:
            if a not in seen_arc:
                seen_arc.add(a)
                loops.append(a)
            continue
        if (a, b) not in seen_arc:
            seen_arc.add((a, b))
            adj[a].append(b)

    result: list[list] = [[verts[v]] for v in sorted(loops)]

    for s in range(n):
        comp = _scc_containing(adj, s, n)
        if len(comp) == 1 and s not in adj[s]:
            continue
        sub = {v: [w for w in adj[v] if w in comp] for v in comp}
        blocked = {v: False for v in comp}
        block_list: dict[int, set] = {v: set() for v in comp}
        stack: list[int] = []

        def unblock(v: int) -> None:
            pending = [v]
            while pending:
                x = pending.pop()
                if blocked[x]:
                    blocked[x] = False
                    pending.extend(block_list[x])
                    block_list[x].clear()

        def circuit(v: int) -> bool:
            found = False
            stack.append(v)
            blocked[v] = True
            for w in sub[v]:
                if w == s:
                    result.append([verts[x] for x in stack])
                    found = True
                elif not blocked[w]:
                    if circuit(w):
                        found = True
            if found:
                unblock(v)
            else:
                for w in sub[v]:
                    block_list[w].add(v)
            stack.pop()
            return found

        circuit(s)
    return result


def _scc_containing(adj, s: int, n: int) -> set:
    """SCC of ``s`` in the subgraph induced by vertices >= s."""
    order: list[int] = []
    seen = [False] * n
    stack = [(s, iter(adj[s]))]
    seen[s] = True
    while stack:
        v, it = stack[-1]
        for w in it:
            if w >= s and not seen[w]:
                seen[w] = True
                stack.append((w, iter(adj[w])))
                break
        else:
            order.append(v)
            stack.pop()
    radj: dict[int, list[int]] = {v: [] for v in order}
    members = set(order)
    for v in order:
        for w in adj[v]:
            if w in members:
                radj[w].append(v)
    comp: set = set()
    todo = [s]
    comp.add(s)
    while todo:
        v = todo.pop()
        for w in radj[v]:
            if w not in comp:
                comp.add(w)
                todo.append(w)
    return comp


def cycle_basis(g: Graph, method: str = "paton") -> CycleBasis:
    """Cycle basis of an undirected graph.

    ``method`` picks the spanning structure: "paton" (stack-grown tree,
    emitting each cycle the moment a non-tree edge closes), "bfs" or "dfs"
    (fundamental basis of the corresponding tree).  Dimension is always
    m - n + c.
    """
    require_undirected(g, "cycle_basis")
    if method == "paton":
        return CycleBasis(_paton_members(g))
    if method in ("bfs", "dfs"):
        parent = _forest(g, method)
        return CycleBasis(_fundamental_members(g, parent))
    raise ValueError(f"unknown cycle basis method {method!r}")


def _paton_members(g: Graph) -> list[list]:
    members: list[list] = []
    parent: dict = {}
    handled: set = set()
    for root in g.vertices():
        if root in parent:
            continue
        parent[root] = (None, None)
        stack = [root]
        while stack:
            z = stack.pop()
            for e in g.edges_of(z):
                ei = g.edge_index(e)
                if ei in handled:
                    continue
                handled.add(ei)
                w = g.opposite(e, z)
                if w == z:
                    members.append([e])  # self-loop: one-edge member
                elif w in parent:
                    members.append([e] + _tree_path_edges(z, w, parent))
                else:
                    parent[w] = (z, e)
                    stack.append(w)
    return members


def _forest(g: Graph, method: str) -> dict:
    parent: dict = {}
    if method == "bfs":
        for root in g.vertices():
            if root in parent:
                continue
            parent[root] = (None, None)
            frontier = deque([root])
            while frontier:
                z = frontier.popleft()
                for e in g.edges_of(z):
                    w = g.opposite(e, z)
                    if w not in parent:
                        parent[w] = (z, e)
                        frontier.append(w)
        return parent
    for root in g.vertices():  # depth-first tree: claim vertices on pop
        if root in parent:
            continue
        stack = [(root, None, None)]
        while stack:
            v, p, via = stack.pop()
            if v in parent:
                continue
            parent[v] = (p, via)
            for e in reversed(g.edges_of(v)):
                w = g.opposite(e, v)
                if w not in parent:
                    stack.append((w, v, e))
    return parent


def _fundamental_members(g: Graph, parent: dict) -> list[list]:
    tree_edges = {g.edge_index(e) for _, e in parent.values() if e is not None}
    members = []
    for e in g.edges():
        if g.edge_index(e) in tree_edges:
            continue
        u, v = g.edge_source(e), g.edge_target(e)
        if u == v:
            members.append([e])
        else:
            members.append([e] + _tree_path_edges(u, v, parent))
    return members


def _tree_path_edges(a, b, parent: dict) -> list:
    """Edges of the a-b path in the forest described by ``parent``."""
    a_vertices = [a]
    a_edges = []
    x = a
    while parent[x][0] is not None:
        p, e = parent[x]
        a_edges.append(e)
        x = p
        a_vertices.append(x)
    apos = {v: i for i, v in enumerate(a_vertices)}
    b_edges = []
    x = b
    while x not in apos:
        p, e = parent[x]
        b_edges.append(e)
        x = p
    return a_edges[: apos[x]] + b_edges
