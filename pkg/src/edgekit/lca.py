"""Lowest common ancestors in rooted trees, plus the DAG generalization.

Four schemes with different space/time trade-offs: a naive walk-up, an
offline batched Tarjan sweep, binary-lifting jump pointers (levels 1, 2, 4,
..., 2^k; O(log n) query), and Euler tour + sparse-table RMQ (O(1) query
after O(n log n) preprocessing).  All agree on every query.
"""

from __future__ import annotations

from collections import deque

from .core import Graph, Vertex, require_directed
from .errors import GraphKindError, VertexNotFoundError
from .spanning import UnionFind


def _rooted_structure(g: Graph, root) -> tuple[dict, dict, list]:
    """Parent and depth maps from a tree (arcs in either orientation).

    Raises :class:`GraphKindError` unless the underlying undirected
    structure is exactly a tree spanning all of ``g``.
    """
    g._require_vertex(root)
    parent = {root: None}
    depth = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e in g.edges_of(v):
            w = g.opposite(e, v)
            if w == v:
                raise GraphKindError("input is not a tree (self-loop found)")
            if w in parent:
                if w != parent[v]:
                    raise GraphKindError("input is not a tree (cycle found)")
                continue
            parent[w] = v
            depth[w] = depth[v] + 1
            order.append(w)
            queue.append(w)
    if len(parent) != g.vertex_count:
        raise GraphKindError("input is not a tree (not connected from the root)")
    return parent, depth, order


class LcaIndex:
    """Preprocessed structure answering lca(u, v) queries for one tree."""

    def __init__(self, g: Graph, root, method: str = "binary_lifting"):
        if g.edge_count != g.vertex_count - 1:
            raise GraphKindError("input is not a tree (edge count is not n - 1)")
        self.method = method
        self.root = root
        self.parent, self.depth, self._order = _rooted_structure(g, root)
        if method == "naive":
            pass
        elif method == "binary_lifting":
            self._build_jump_table()
        elif method == "euler_rmq":
            self._build_euler_rmq(g)
        else:
            raise ValueError(f"unknown LCA method {method!r}")

    # ------------------------------------------------------ preprocessing

    def _build_jump_table(self) -> None:
        levels = 1
        n = len(self._order)
        while (1 << levels) < n:
            levels += 1
        table = [{v: (self.parent[v] or v) for v in self._order}]
        for _ in range(1, levels + 1):
            prev = table[-1]
            table.append({v: prev[prev[v]] for v in self._order})
        self.jump_table = table  # jump_table[j][v]: 2^j-th ancestor (clamped)

    def _build_euler_rmq(self, g: Graph) -> None:
        tour: list[tuple[int, Vertex]] = []
        first: dict = {}
        stack: list = [(self.root, iter(self._children(g, self.root)))]
        tour.append((0, self.root))
        first[self.root] = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                tour.append((self.depth[w], w))
                first[w] = len(tour) - 1
                stack.append((w, iter(self._children(g, w))))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    tour.append((self.depth[u], u))
        self.euler_tour = tour
        self.first_occurrence = first
        # sparse table over (depth, tour position): sparse_table[j][i] is the
        # minimum of positions i .. i + 2^j - 1; position ties keep leftmost
        m = len(tour)
        table = [[(d, i) for i, (d, _v) in enumerate(tour)]]
        j = 1
        while (1 << j) <= m:
            prev = table[-1]
            span = 1 << (j - 1)
            table.append(
                [min(prev[i], prev[i + span]) for i in range(m - (1 << j) + 1)]
            )
            j += 1
        self.sparse_table = table
        self._log = [0] * (m + 1)
        for i in range(2, m + 1):
            self._log[i] = self._log[i // 2] + 1

    def _children(self, g: Graph, v) -> list:
        return [w for w in (g.opposite(e, v) for e in g.edges_of(v)) if self.parent.get(w) == v]

    # ------------------------------------------------------------ queries

    def query(self, u, v):
        if u not in self.depth or v not in self.depth:
            raise VertexNotFoundError("query vertex is outside the indexed tree")
        if self.method == "binary_lifting":
            return self._query_lifting(u, v)
        if self.method == "euler_rmq":
            return self._query_rmq(u, v)
        return self._query_naive(u, v)

    def _query_naive(self, u, v):
        du, dv = self.depth[u], self.depth[v]
        while du > dv:
            u = self.parent[u]
            du -= 1
        while dv > du:
            v = self.parent[v]
            dv -= 1
        while u != v:
            u = self.parent[u]
            v = self.parent[v]
        return u

    def _query_lifting(self, u, v):
        table = self.jump_table
        if self.depth[u] < self.depth[v]:
            u, v = v, u
        diff = self.depth[u] - self.depth[v]
        j = 0
        while diff:
            if diff & 1:
                u = table[j][u]
            diff >>= 1
            j += 1
        if u == v:
            return u
        for j in range(len(table) - 1, -1, -1):
            if table[j][u] != table[j][v]:
                u = table[j][u]
                v = table[j][v]
        return self.parent[u]

    def _query_rmq(self, u, v):
        i, j = self.first_occurrence[u], self.first_occurrence[v]
        if i > j:
            i, j = j, i
        span = self._log[j - i + 1]
        left = self.sparse_table[span][i]
        right = self.sparse_table[span][j - (1 << span) + 1]
        return self.euler_tour[min(left, right)[1]][1]


def lca_preprocess(g: Graph, root, method: str = "binary_lifting") -> LcaIndex:
    """Validate that ``g`` is a tree and build an LCA index over it."""
    return LcaIndex(g, root, method)


def lca_query(index: LcaIndex, u, v):
    """The deepest vertex having both ``u`` and ``v`` as descendants."""
    return index.query(u, v)


def lca_batch_tarjan(g: Graph, root, queries) -> list:
    """Answer all (u, v) queries in one offline union-find DFS sweep."""
    if g.edge_count != g.vertex_count - 1:
        raise GraphKindError("input is not a tree (edge count is not n - 1)")
    parent, depth, order = _rooted_structure(g, root)
    queries = list(queries)
    for u, v in queries:
        if u not in depth or v not in depth:
            raise VertexNotFoundError("query vertex is outside the tree")
    pending: dict = {}
    for qi, (u, v) in enumerate(queries):
        pending.setdefault(u, []).append((v, qi))
        pending.setdefault(v, []).append((u, qi))

    uf = UnionFind(order)
    anchor = {v: v for v in order}  # current sweep anchor of each merged set
    colored: set = set()
    answers: list = [None] * len(queries)

    children: dict = {v: [] for v in order}
    for v in order:
        p = parent[v]
        if p is not None:
            children[p].append(v)
    # iterative post-order: process a vertex after all children are done
    stack: list = [(root, iter(children[root]))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            stack.append((w, iter(children[w])))
            advanced = True
            break
        if advanced:
            continue
        stack.pop()
        for other, qi in pending.get(v, ()):  # answer what we can at v
            if other == v:
                answers[qi] = v
            elif other in colored and answers[qi] is None:
                answers[qi] = anchor[uf.find(other)]
        colored.add(v)
        if stack:
            p = stack[-1][0]
            uf.union(p, v)
            anchor[uf.find(p)] = p
    return answers


def dag_deepest_common_ancestors(g: Graph, u, v) -> list:
    """All deepest common ancestors of ``u`` and ``v`` in a DAG.

    Depth is the longest-path distance from the in-degree-0 roots; the
    answer is the set (insertion-ordered list) of common ancestors of
    maximum depth.  Ancestry is reflexive.
    """
    require_directed(g, "dag_deepest_common_ancestors")
    g._require_vertex(u)
    g._require_vertex(v)
    order = _topological_order(g)
    depth: dict = {}
    for x in order:
        preds = [g.edge_source(e) for e in g.in_edges_of(x)]
        depth[x] = 0 if not preds else 1 + max(depth[p] for p in preds)

    def ancestors(x) -> set:
        out = {x}
        todo = [x]
        while todo:
            y = todo.pop()
            for e in g.in_edges_of(y):
                p = g.edge_source(e)
                if p not in out:
                    out.add(p)
                    todo.append(p)
        return out

    common = ancestors(u) & ancestors(v)
    if not common:
        return []
    best = max(depth[x] for x in common)
    return [x for x in g.vertices() if x in common and depth[x] == best]


def _topological_order(g: Graph) -> list:
    indeg = {v: g.in_degree_of(v) for v in g.vertices()}
    queue = deque(v for v in g.vertices() if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for e in g.out_edges_of(v):
            w = g.edge_target(e)
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != g.vertex_count:
        raise GraphKindError("graph is not acyclic")
    return order
