"""Graph generators: deterministic families, classic random models, and the
layered flow instances used by the benchmark harness.

Every random generator takes an explicit integer seed and draws from one
PCG64 stream, so identical parameters reproduce identical edge lists,
byte for byte.  Structural postconditions (edge-count formulas, degree
constraints) hold by construction and are asserted in the test suite.
"""

from __future__ import annotations

import numpy as np

from .adjacency import AdjacencyGraph
from .core import Graph, GraphKind
from .rng import new_rng

_SIMPLE = GraphKind()
_SIMPLE_WEIGHTED = GraphKind(weighted=True)
_DIRECTED_SIMPLE = GraphKind(directed=True)


def _graph(kind: GraphKind, n: int, edges) -> AdjacencyGraph:
    g = AdjacencyGraph(kind)
    for v in range(n):
        g.add_vertex(v)
    if kind.weighted:
        for u, v, w in edges:
            g.add_edge(int(u), int(v), weight=w)
    else:
        for u, v in edges:
            g.add_edge(int(u), int(v))
    return g


# --------------------------------------------------------------------------
# deterministic families
# --------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("need n >= 0")
    return _graph(_SIMPLE, n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def ring_graph(n: int) -> Graph:
    """Cycle graph C_n (n >= 3)."""
    if n < 3:
        raise ValueError("a ring needs at least 3 vertices")
    return _graph(_SIMPLE, n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n_leaves: int) -> Graph:
    """K_{1,n}: hub 0 plus ``n_leaves`` leaves."""
    if n_leaves < 0:
        raise ValueError("need n_leaves >= 0")
    return _graph(_SIMPLE, n_leaves + 1, ((0, i) for i in range(1, n_leaves + 1)))


def wheel_graph(n_rim: int) -> Graph:
    """Hub 0 joined to every vertex of a C_{n_rim} rim."""
    if n_rim < 3:
        raise ValueError("a wheel rim needs at least 3 vertices")
    edges = [(0, i) for i in range(1, n_rim + 1)]
    edges += [(1 + i, 1 + (i + 1) % n_rim) for i in range(n_rim)]
    return _graph(_SIMPLE, n_rim + 1, edges)


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols lattice, vertices numbered row-major."""
    if rows < 1 or cols < 1:
        raise ValueError("need rows, cols >= 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return _graph(_SIMPLE, rows * cols, edges)


def hypercube_graph(dim: int) -> Graph:
    """2^dim vertices; edges join ids differing in exactly one bit."""
    if dim < 0:
        raise ValueError("need dim >= 0")
    n = 1 << dim
    edges = []
    for v in range(n):
        for b in range(dim):
            w = v ^ (1 << b)
            if v < w:
                edges.append((v, w))
    return _graph(_SIMPLE, n, edges)


# --------------------------------------------------------------------------
# Erdos-Renyi models
# --------------------------------------------------------------------------


def _pair_row_starts(n: int) -> np.ndarray:
    # start position of row i in the (i < j) pair enumeration
    return np.concatenate([[0], np.cumsum(np.arange(n - 1, 0, -1))]).astype(np.int64)


def _unrank_pairs(n: int, positions: np.ndarray) -> np.ndarray:
    starts = _pair_row_starts(n)
    i = np.searchsorted(starts, positions, side="right") - 1
    j = positions - starts[i] + i + 1
    return np.stack([i, j], axis=1)


def gnp_edges(n: int, p: float, seed: int) -> np.ndarray:
    """Edge list of a G(n,p) draw as an (m, 2) int array.

    Sampled with geometric gap-skipping, O(m) regardless of n.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("need 0 <= p <= 1")
    total = n * (n - 1) // 2
    if total == 0 or p == 0.0:
        return np.empty((0, 2), dtype=np.int64)
    if p == 1.0:
        return _unrank_pairs(n, np.arange(total, dtype=np.int64))
    rng = new_rng(seed)
    taken = []
    pos = -1
    while True:
        gaps = rng.geometric(p, size=4096).astype(np.int64)
        cand = pos + np.cumsum(gaps)
        inside = cand[cand < total]
        taken.append(inside)
        if len(inside) < len(cand):
            break
        pos = int(cand[-1])
    positions = np.concatenate(taken)
    return _unrank_pairs(n, positions)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n,p): each of the C(n,2) edges kept with probability p."""
    return _graph(_SIMPLE, n, gnp_edges(n, p, seed))


def _floyd_sample(total: int, m: int, rng) -> list[int]:
    """m distinct integers from range(total), uniformly (Floyd's algorithm)."""
    chosen: dict = {}
    for t in range(total - m, total):
        r = int(rng.integers(0, t + 1))
        pick = r if r not in chosen else t
        chosen[pick] = None
    return list(chosen)


def gnm(n: int, m: int, seed: int) -> Graph:
    """Erdos-Renyi G(n,m): uniform over all simple graphs with m edges."""
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise ValueError(f"m must lie in [0, {total}]")
    rng = new_rng(seed)
    positions = np.asarray(_floyd_sample(total, m, rng), dtype=np.int64)
    return _graph(_SIMPLE, n, _unrank_pairs(n, positions))


def random_bipartite(
    n1: int, n2: int, p: float | None = None, m: int | None = None, seed: int = 0
) -> Graph:
    """Random bipartite graph on sides 0..n1-1 and n1..n1+n2-1.

    Exactly one of ``p`` (edge probability) or ``m`` (edge count) selects
    the model.
    """
    if (p is None) == (m is None):
        raise ValueError("give exactly one of p or m")
    total = n1 * n2
    rng = new_rng(seed)
    if m is not None:
        if m < 0 or m > total:
            raise ValueError(f"m must lie in [0, {total}]")
        positions = _floyd_sample(total, m, rng)
    else:
        if not 0.0 <= p <= 1.0:
            raise ValueError("need 0 <= p <= 1")
        draws = rng.random(total)
        positions = np.flatnonzero(draws < p)
    edges = ((pos // n2, n1 + pos % n2) for pos in positions)
    return _graph(_SIMPLE, n1 + n2, edges)


def random_regular(n: int, d: int, seed: int, max_restarts: int = 1000) -> Graph:
    """Uniform-ish d-regular graph by the pairing model with restarts."""
    if d < 0 or n < 0:
        raise ValueError("need n, d >= 0")
    if (n * d) % 2 or d >= max(n, 1):
        if d == 0:
            return _graph(_SIMPLE, n, [])
        raise ValueError("degree sequence infeasible: need n*d even and d < n")
    if d == 0:
        return _graph(_SIMPLE, n, [])
    rng = new_rng(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    for _ in range(max_restarts):
        perm = rng.permutation(stubs)
        u, v = perm[0::2], perm[1::2]
        if np.any(u == v):
            continue
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        keys = lo * n + hi
        if len(np.unique(keys)) != len(keys):
            continue
        return _graph(_SIMPLE, n, np.stack([u, v], axis=1))
    raise ValueError(f"pairing model failed to produce a simple graph in {max_restarts} tries")


# --------------------------------------------------------------------------
# preferential attachment and small-world models
# --------------------------------------------------------------------------


def barabasi_albert(m0: int, m: int, n: int, seed: int) -> Graph:
    """Preferential attachment from a K_{m0} seed clique.

    Each of the n - m0 new vertices attaches to ``m`` distinct existing
    vertices chosen with probability proportional to current degree, so the
    final edge count is C(m0,2) + m*(n - m0) exactly.
    """
    if not 1 <= m <= m0 <= n:
        raise ValueError("need 1 <= m <= m0 <= n")
    rng = new_rng(seed)
    edges: list[tuple[int, int]] = [
        (i, j) for i in range(m0) for j in range(i + 1, m0)
    ]
    # one entry per edge endpoint: sampling it uniformly is degree-weighted
    endpoints: list[int] = []
    for u, v in edges:
        endpoints.append(u)
        endpoints.append(v)
    for v in range(m0, n):
        targets: dict = {}
        while len(targets) < m:
            t = endpoints[int(rng.integers(0, len(endpoints)))]
            targets.setdefault(t, None)
        for t in targets:
            edges.append((v, t))
            endpoints.append(v)
            endpoints.append(t)
    return _graph(_SIMPLE, n, edges)


def watts_strogatz(
    n: int, k: int, p: float, add_instead_of_rewire: bool = False, seed: int = 0
) -> Graph:
    """Small-world ring lattice with lap-by-lap rewiring.

    Starts from the ring lattice where every vertex reaches its k nearest
    neighbours; for each lap j = 1..k/2 and vertex v, the edge to the j-th
    clockwise neighbour is rewired to a uniform endpoint with probability p
    (duplicates and self-loops are redrawn).  With
    ``add_instead_of_rewire`` the shortcut is added and the lattice edge
    kept (Newman-Watts), so the edge count can only grow.
    """
    if k % 2:
        raise ValueError("k must be even")
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    if not 0.0 <= p <= 1.0:
        raise ValueError("need 0 <= p <= 1")
    rng = new_rng(seed)
    present: dict = {}

    def norm(a: int, b: int):
        return (a, b) if a < b else (b, a)

    for j in range(1, k // 2 + 1):
        for v in range(n):
            present[norm(v, (v + j) % n)] = None
    for j in range(1, k // 2 + 1):
        for v in range(n):
            if rng.random() >= p:
                continue
            lattice = norm(v, (v + j) % n)
            if len(present) >= n * (n - 1) // 2:
                continue  # complete graph: nowhere to rewire to
            for _ in range(8 * n):  # rejection sampling with a safety cap
                w = int(rng.integers(0, n))
                if w != v and norm(v, w) not in present:
                    if not add_instead_of_rewire:
                        del present[lattice]
                    present[norm(v, w)] = None
                    break
    return _graph(_SIMPLE, n, iter(present))


def kleinberg(n: int, p: int, q: int, r: float, seed: int) -> Graph:
    """Kleinberg small-world: n x n lattice, local arcs within lattice
    distance p, q long-range arcs per node drawn proportional to d^-r.

    Long-range endpoints are sampled without replacement from the nodes
    strictly outside the local ball (uniformly when r = 0).
    """
    if p < 1 or q < 0 or r < 0:
        raise ValueError("need p >= 1, q >= 0, r >= 0")
    rng = new_rng(seed)
    rows, cols = np.divmod(np.arange(n * n), n)
    g = AdjacencyGraph(_DIRECTED_SIMPLE)
    for v in range(n * n):
        g.add_vertex(v)
    for u in range(n * n):
        dist = np.abs(rows - rows[u]) + np.abs(cols - cols[u])
        local = np.flatnonzero((dist <= p) & (dist > 0))
        for w in local:
            g.add_edge(u, int(w))
        far = np.flatnonzero(dist > p)
        if q == 0 or len(far) == 0:
            continue
        weights = dist[far].astype(np.float64) ** -r
        cumulative = np.cumsum(weights)
        chosen: dict = {}
        want = min(q, len(far))
        while len(chosen) < want:
            x = rng.random() * cumulative[-1]
            pick = int(far[np.searchsorted(cumulative, x, side="right")])
            chosen.setdefault(pick, None)
        for w in chosen:
            g.add_edge(u, w)
    return g


# --------------------------------------------------------------------------
# recursive-matrix model
# --------------------------------------------------------------------------


def rmat_edges(
    scale: int,
    edge_factor: int,
    a: float,
    b: float,
    c: float,
    d: float,
    seed: int,
) -> np.ndarray:
    """R-MAT edge insertions as an (edge_factor * 2^scale, 2) int array.

    Each edge picks one of the four adjacency-matrix quadrants per bit
    level with probabilities (a, b, c, d); duplicates and self-loops are
    kept.
    """
    if abs(a + b + c + d - 1.0) > 1e-12:
        raise ValueError("quadrant probabilities must sum to 1")
    if scale < 0 or edge_factor < 0:
        raise ValueError("need scale, edge_factor >= 0")
    n = 1 << scale
    m = edge_factor * n
    rng = new_rng(seed)
    u = np.zeros(m, dtype=np.int64)
    v = np.zeros(m, dtype=np.int64)
    for _ in range(scale):
        draws = rng.random(m)
        row_bit = draws >= a + b  # quadrants c and d sit in the lower half
        col_bit = (draws >= a) & (draws < a + b) | (draws >= a + b + c)
        u = (u << 1) | row_bit
        v = (v << 1) | col_bit
    return np.stack([u, v], axis=1)


def rmat(
    scale: int,
    edge_factor: int,
    a: float,
    b: float,
    c: float,
    d: float,
    seed: int,
    directed: bool = True,
    dedupe: bool = False,
) -> Graph:
    """R-MAT graph on 2^scale vertices with edge_factor * 2^scale insertions.

    Duplicate insertions become parallel edges unless ``dedupe`` collapses
    them (dropping self-loops too, for consumers that need simple graphs).
    """
    pairs = rmat_edges(scale, edge_factor, a, b, c, d, seed)
    if dedupe:
        seen: dict = {}
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                continue
            if not directed and u > v:
                u, v = v, u
            seen[(u, v)] = None
        pairs = list(seen)
        kind = GraphKind(directed=directed)
    else:
        kind = GraphKind(directed=directed, allows_self_loops=True, allows_multiple_edges=True)
    return _graph(kind, 1 << scale, pairs)


GRAPH500 = {"a": 0.57, "b": 0.19, "c": 0.19, "d": 0.05, "edge_factor": 16}


# --------------------------------------------------------------------------
# layered max-flow instances
# --------------------------------------------------------------------------


def rmfgen(
    a: int, b: int, cmin: int, cmax: int, seed: int
) -> tuple[Graph, int, int]:
    """Layered grid flow network: b frames of a*a nodes.

    Grid neighbours inside a frame are joined by arcs in both directions
    with capacity a*a*cmax (large enough to shuffle any flow inside the
    frame); each frame sends ``a`` arcs from distinct random nodes to
    random nodes of the next frame with capacity uniform in [cmin, cmax].
    Node count is a^2*b and arc count 4a(a-1)b + a(b-1) exactly.  Returns
    (graph, source, sink) with the source in the first frame and the sink
    in the last.
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    if not 0 < cmin <= cmax:
        raise ValueError("need 0 < cmin <= cmax")
    rng = new_rng(seed)
    layer = a * a
    n = layer * b
    inner_cap = float(a * a * cmax)
    edges: list[tuple[int, int, float]] = []

    def node(l: int, i: int, j: int) -> int:
        return l * layer + i * a + j

    for l in range(b):
        for i in range(a):
            for j in range(a):
                if j + 1 < a:
                    edges.append((node(l, i, j), node(l, i, j + 1), inner_cap))
                    edges.append((node(l, i, j + 1), node(l, i, j), inner_cap))
                if i + 1 < a:
                    edges.append((node(l, i, j), node(l, i + 1, j), inner_cap))
                    edges.append((node(l, i + 1, j), node(l, i, j), inner_cap))
        if l + 1 < b:
            sources = rng.choice(layer, size=a, replace=False)
            for src in sources:
                dst = int(rng.integers(0, layer))
                cap = float(rng.integers(cmin, cmax + 1))
                edges.append((l * layer + int(src), (l + 1) * layer + dst, cap))

    kind = GraphKind(directed=True, weighted=True, allows_multiple_edges=True)
    return _graph(kind, n, edges), 0, n - 1


def rmfgen_family(
    shape: str, size: int, cmin: int = 1, cmax: int = 100, seed: int = 0
) -> tuple[Graph, int, int]:
    """The three benchmark shapes: long (b = a^2), flat (a = b^2), wide (a = b)."""
    if shape == "long":
        a, b = size, size * size
    elif shape == "flat":
        a, b = size * size, size
    elif shape in ("wide", "square"):
        a, b = size, size
    else:
        raise ValueError(f"unknown rmfgen shape {shape!r}")
    return rmfgen(a, b, cmin, cmax, seed)


def washington_level(
    rows: int, cols: int, cmin: int = 1, cmax: int = 10**4, seed: int = 0
) -> tuple[Graph, int, int]:
    """Random level graph: rows x cols grid, three forward arcs per node.

    Every node of column c sends arcs to 3 randomly chosen nodes of column
    c+1 (distinct rows when rows >= 3) with capacities uniform in
    [cmin, cmax].  A dedicated source feeds the whole first column and the
    whole last column drains into a dedicated sink, both through
    generously sized arcs.  Returns (graph, source, sink).
    """
    if rows < 1 or cols < 1:
        raise ValueError("need rows, cols >= 1")
    if not 0 < cmin <= cmax:
        raise ValueError("need 0 < cmin <= cmax")
    rng = new_rng(seed)
    n = rows * cols
    s, t = n, n + 1
    big = float(3 * cmax)

    def node(r: int, c: int) -> int:
        return r * cols + c

    edges: list[tuple[int, int, float]] = []
    for r in range(rows):
        edges.append((s, node(r, 0), big))
    for c in range(cols - 1):
        for r in range(rows):
            if rows >= 3:
                picks = rng.choice(rows, size=3, replace=False)
            else:
                picks = rng.integers(0, rows, size=3)
            for rr in picks:
                cap = float(rng.integers(cmin, cmax + 1))
                edges.append((node(r, c), node(int(rr), c + 1), cap))
    for r in range(rows):
        edges.append((node(r, cols - 1), t, big))

    kind = GraphKind(directed=True, weighted=True, allows_multiple_edges=True)
    return _graph(kind, n + 2, edges), s, t


def washington_family(
    shape: str, size: int, cmin: int = 1, cmax: int = 10**4, seed: int = 0
) -> tuple[Graph, int, int]:
    """Benchmark shapes: wide (64 rows, ``size`` columns) and long (64
    columns, ``size`` rows)."""
    if shape == "wide":
        return washington_level(64, size, cmin, cmax, seed)
    if shape == "long":
        return washington_level(size, 64, cmin, cmax, seed)
    raise ValueError(f"unknown washington shape {shape!r}")


# --------------------------------------------------------------------------
# weight decoration
# --------------------------------------------------------------------------


def with_uniform_integer_weights(g: Graph, low: int, high: int, seed: int) -> Graph:
    """Weighted copy of ``g`` with i.i.d. integer weights in [low, high].

    Weights are drawn in edge-insertion order, so the decorated graph is a
    pure function of (input graph, seed).
    """
    rng = new_rng(seed)
    kind = GraphKind(
        directed=g.kind.directed,
        allows_self_loops=g.kind.allows_self_loops,
        allows_multiple_edges=g.kind.allows_multiple_edges,
        weighted=True,
    )
    out = AdjacencyGraph(kind)
    for v in g.vertices():
        out.add_vertex(v)
    for e in g.edges():
        w = float(rng.integers(low, high + 1))
        out.add_edge(g.edge_source(e), g.edge_target(e), weight=w)
    return out
