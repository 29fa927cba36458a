"""Graph traversals, connectivity structure, and recognition algorithms.

Neighbour expansion always follows backend iteration order, so every
traversal here is deterministic for a given construction sequence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph, Vertex, require_directed, require_undirected
from .errors import GraphError


@dataclass
class ComponentLabeling:
    """Dense component ids: same id iff mutually (strongly) connected."""

    component_of: dict
    count: int

    def groups(self) -> list[list]:
        out = [[] for _ in range(self.count)]
        for v, c in self.component_of.items():
            out[c].append(v)
        return out


@dataclass
class BlockDecomposition:
    """2-connectivity structure: biconnected blocks, cutpoints, bridges.

    Every edge belongs to exactly one block; a non-loop edge is a bridge iff
    its block is that single edge.  Self-loops form their own trivial block
    and are never bridges.
    """

    blocks: list[list]
    cutpoints: list
    bridges: list


@dataclass
class BipartiteResult:
    bipartite: bool
    sides: tuple[list, list] | None = None
    odd_cycle: list | None = None  # closed odd walk as a vertex cycle

    def __bool__(self) -> bool:
        return self.bipartite


@dataclass
class ChordalityResult:
    chordal: bool
    elimination_order: list | None = None  # perfect elimination order
    chordless_cycle: list | None = None  # length >= 4, no chords

    def __bool__(self) -> bool:
        return self.chordal


def bfs_order(g: Graph, source: Vertex) -> list:
    """Vertices reachable from ``source`` in breadth-first order."""
    g._require_vertex(source)
    seen = {source: None}
    order = [source]
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for e in g.out_edges_of(v):
            w = g.opposite(e, v)
            if w not in seen:
                seen[w] = None
                order.append(w)
                queue.append(w)
    return order


def dfs_order(g: Graph, source: Vertex) -> list:
    """Vertices reachable from ``source`` in depth-first preorder."""
    g._require_vertex(source)
    seen = {}
    order = []
    stack = [source]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen[v] = None
        order.append(v)
        # push reversed so the first-listed neighbour is expanded first
        for e in reversed(g.out_edges_of(v)):
            w = g.opposite(e, v)
            if w not in seen:
                stack.append(w)
    return order


def connected_components(g: Graph) -> ComponentLabeling:
    """Connected components; weak components when ``g`` is directed."""
    comp: dict = {}
    count = 0
    for root in g.vertices():
        if root in comp:
            continue
        comp[root] = count
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in g.edges_of(v):
                w = g.opposite(e, v)
                if w not in comp:
                    comp[w] = count
                    queue.append(w)
        count += 1
    return ComponentLabeling(comp, count)


def strong_components(g: Graph) -> ComponentLabeling:
    """Strongly connected components by Kosaraju-Sharir (two DFS sweeps)."""
    require_directed(g, "strong_components")
    finish: list = []
    seen: dict = {}
    for root in g.vertices():
        if root in seen:
            continue
        seen[root] = None
        stack = [(root, iter(g.out_edges_of(root)))]
        while stack:
            v, it = stack[-1]
            for e in it:
                w = g.opposite(e, v)
                if w not in seen:
                    seen[w] = None
                    stack.append((w, iter(g.out_edges_of(w))))
                    break
            else:
                finish.append(v)
                stack.pop()

    comp: dict = {}
    count = 0
    for root in reversed(finish):
        if root in comp:
            continue
        comp[root] = count
        stack = [root]
        while stack:
            v = stack.pop()
            for e in g.in_edges_of(v):
                w = g.edge_source(e)
                if w not in comp:
                    comp[w] = count
                    stack.append(w)
        count += 1
    return ComponentLabeling(comp, count)


def biconnectivity(g: Graph) -> BlockDecomposition:
    """Biconnected blocks, cutpoints and bridges (Hopcroft-Tarjan DFS).

    Disconnected input is handled per component.
    """
    require_undirected(g, "biconnectivity")
    disc: dict = {}
    low: dict = {}
    clock = 0
    blocks: list[list] = []
    cutpoints: dict = {}
    estack: list = []

    for root in g.vertices():
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        # frame: [vertex, tree edge used to enter, tree edge already skipped?, iterator]
        stack = [[root, None, True, iter(g.edges_of(root))]]
        while stack:
            frame = stack[-1]
            v, it = frame[0], frame[3]
            pushed = False
            for e in it:
                if e is frame[1] and not frame[2]:
                    frame[2] = True  # skip the entering tree edge exactly once
                    continue
                w = g.opposite(e, v)
                if w == v:
                    blocks.append([e])  # self-loop forms a trivial block
                    continue
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    estack.append(e)
                    if v == root:
                        root_children += 1
                    stack.append([w, e, False, iter(g.edges_of(w))])
                    pushed = True
                    break
                if disc[w] < disc[v]:  # genuine back edge (up the tree)
                    estack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if pushed:
                continue
            stack.pop()
            if not stack:
                break
            tree_edge = frame[1]
            parent = stack[-1][0]
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                block = []
                while True:
                    be = estack.pop()
                    block.append(be)
                    if be is tree_edge:
                        break
                blocks.append(block)
                if parent != root or root_children >= 2:
                    cutpoints[parent] = None

    bridges = [
        b[0]
        for b in blocks
        if len(b) == 1 and g.edge_source(b[0]) != g.edge_target(b[0])
    ]
    return BlockDecomposition(blocks, list(cutpoints), bridges)


def is_bipartite(g: Graph) -> BipartiteResult:
    """Two-colouring, or an odd closed walk proving none exists."""
    require_undirected(g, "is_bipartite")
    color: dict = {}
    parent: dict = {}
    for root in g.vertices():
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in g.edges_of(v):
                w = g.opposite(e, v)
                if w == v:
                    return BipartiteResult(False, odd_cycle=[v])
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(v, w, parent))
    left = [v for v, c in color.items() if c == 0]
    right = [v for v, c in color.items() if c == 1]
    return BipartiteResult(True, sides=(left, right))


def _odd_cycle(v, w, parent):
    """Splice the BFS-tree paths of a same-colour edge into an odd cycle."""
    vp = [v]
    x = v
    while parent[x] is not None:
        x = parent[x]
        vp.append(x)
    pos = {u: i for i, u in enumerate(vp)}
    wp = [w]
    x = w
    while x not in pos:
        x = parent[x]
        wp.append(x)
    meet = x
    cycle = vp[: pos[meet] + 1]  # v .. meet
    cycle.extend(reversed(wp[:-1]))  # back down to w (meet excluded)
    return cycle


def mcs_order(g: Graph) -> list:
    """Maximum-cardinality-search visit order (ties by insertion order)."""
    verts = g.vertex_list()
    weight = {v: 0 for v in verts}
    visited: dict = {}
    order = []
    for _ in verts:
        best = None
        for v in verts:
            if v in visited:
                continue
            if best is None or weight[v] > weight[best]:
                best = v
        visited[best] = None
        order.append(best)
        for w in _simple_neighbors(g, best):
            if w not in visited:
                weight[w] += 1
    return order


def lexbfs_order(g: Graph) -> list:
    """Lexicographic BFS visit order via partition refinement."""
    blocks: list[list] = [g.vertex_list()] if g.vertex_count else []
    order = []
    while blocks:
        head = blocks[0]
        v = head.pop(0)
        if not head:
            blocks.pop(0)
        order.append(v)
        nv = set(_simple_neighbors(g, v))
        refined = []
        for block in blocks:
            inside = [x for x in block if x in nv]
            outside = [x for x in block if x not in nv]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        blocks = refined
    return order


def _simple_neighbors(g: Graph, v) -> list:
    """Distinct neighbours of ``v`` ignoring self-loops, in first-seen order."""
    seen = {}
    for e in g.edges_of(v):
        w = g.opposite(e, v)
        if w != v:
            seen.setdefault(w, None)
    return list(seen)


def verify_elimination_order(g: Graph, order: list):
    """Check the PEO property; returns None or a violating (v, u, w) triple.

    For each vertex the neighbours that come later in the order must form a
    clique; it is enough to test the earliest such neighbour against the
    rest.
    """
    pos = {v: i for i, v in enumerate(order)}
    nbr = {v: set(_simple_neighbors(g, v)) for v in order}
    for v in order:
        later = [w for w in nbr[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        for w in later:
            if w != u and w not in nbr[u]:
                return (v, u, w)
    return None


def chordality(g: Graph, method: str = "mcs") -> ChordalityResult:
    """Chordal recognition with a certificate either way.

    ``method`` selects the linear-time search ("mcs" or "lexbfs") whose
    reversed visit order is tested as a perfect elimination order.  On
    success the verified order is returned; on failure a chordless cycle of
    length at least four.
    """
    require_undirected(g, "chordality")
    if method == "mcs":
        visit = mcs_order(g)
    elif method == "lexbfs":
        visit = lexbfs_order(g)
    else:
        raise ValueError(f"unknown chordality method {method!r}")
    order = list(reversed(visit))
    breaker = verify_elimination_order(g, order)
    if breaker is None:
        return ChordalityResult(True, elimination_order=order)
    cycle = _chordless_cycle(g, *breaker)
    return ChordalityResult(False, chordless_cycle=cycle)


def _chordless_cycle(g: Graph, v, u, w):
    """A chordless >=4 cycle grown from a failed elimination triple (v; u, w)."""
    cyc = _cycle_through(g, v, u, w)
    if cyc is not None:
        return cyc
    # fall back to scanning every non-adjacent common-neighbour pair; on a
    # non-chordal graph some pair closes a hole
    for x in g.vertices():
        nx = _simple_neighbors(g, x)
        nset = {y: set(_simple_neighbors(g, y)) for y in nx}
        for i in range(len(nx)):
            for j in range(i + 1, len(nx)):
                a, b = nx[i], nx[j]
                if b in nset[a]:
                    continue
                cyc = _cycle_through(g, x, a, b)
                if cyc is not None:
                    return cyc
    raise GraphError("no chordless cycle found in a non-chordal graph")


def _cycle_through(g: Graph, v, u, w):
    """Shortest u-w path avoiding N[v] minus {u, w}, closed through v."""
    banned = set(_simple_neighbors(g, v))
    banned.discard(u)
    banned.discard(w)
    banned.add(v)
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            path.reverse()  # u .. w
            return [v] + path
        for y in _simple_neighbors(g, x):
            if y not in banned and y not in parent:
                parent[y] = x
                queue.append(y)
    return None
