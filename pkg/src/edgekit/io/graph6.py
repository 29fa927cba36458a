"""graph6 and sparse6: compact printable-ASCII encodings of undirected
graphs.

graph6 packs the upper triangle of the adjacency matrix column by column
into 6-bit groups (simple graphs only); sparse6 encodes an edge stream in
(1 + k)-bit records and also represents self-loops and parallel edges.
Both follow the published format definitions bit for bit, including the
``>>graph6<<`` / ``>>sparse6<<`` optional input headers (accepted, never
emitted).
"""

from __future__ import annotations

from ..adjacency import AdjacencyGraph
from ..core import Graph, GraphKind
from ..errors import GraphError, ParseError

_G6_HEADER = ">>graph6<<"
_S6_HEADER = ">>sparse6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        bits = [(n >> s) & 63 for s in (12, 6, 0)]
        return chr(126) + "".join(chr(b + 63) for b in bits)
    if n <= 68719476735:
        bits = [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
        return chr(126) + chr(126) + "".join(chr(b + 63) for b in bits)
    raise GraphError("vertex count too large for graph6/sparse6")


def _char_value(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise ParseError(f"invalid character {text[pos]!r}", 1, pos + 1)
    return c - 63


def _decode_n(text: str, pos: int) -> tuple[int, int]:
    if pos >= len(text):
        raise ParseError("truncated payload: missing vertex count", 1, pos + 1)
    v = _char_value(text, pos)
    if v != 63:
        return v, pos + 1
    if pos + 1 < len(text) and ord(text[pos + 1]) == 126:
        if pos + 8 > len(text):
            raise ParseError("truncated 36-bit vertex count", 1, pos + 2)
        n = 0
        for i in range(pos + 2, pos + 8):
            n = (n << 6) | _char_value(text, i)
        return n, pos + 8
    if pos + 4 > len(text):
        raise ParseError("truncated 18-bit vertex count", 1, pos + 1)
    n = 0
    for i in range(pos + 1, pos + 4):
        n = (n << 6) | _char_value(text, i)
    return n, pos + 4


def _pack_bits(bits: list[int]) -> str:
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def graph6_encode(g: Graph) -> str:
    """Encode a simple undirected graph (no loops, no parallel edges)."""
    if g.kind.directed:
        raise GraphError("graph6 encodes undirected graphs only")
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [[False] * n for _ in range(n)]
    for e in g.edges():
        a, b = index[g.edge_source(e)], index[g.edge_target(e)]
        if a == b:
            raise GraphError("graph6 cannot represent self-loops")
        if adj[a][b]:
            raise GraphError("graph6 cannot represent parallel edges")
        adj[a][b] = adj[b][a] = True
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if adj[i][j] else 0)
    return _encode_n(n) + _pack_bits(bits)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string into a simple undirected graph."""
    text = text.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER) :]
    n, pos = _decode_n(text, 0)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(text) - pos < need:
        raise ParseError(
            f"truncated payload: need {need} body characters, found {len(text) - pos}",
            1,
            pos + 1,
        )
    if len(text) - pos > need:
        raise ParseError("trailing characters after graph6 payload", 1, pos + need + 1)
    bits = []
    for i in range(pos, pos + need):
        v = _char_value(text, i)
        bits.extend((v >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    g = AdjacencyGraph(GraphKind())
    for v in range(n):
        g.add_vertex(v)
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                g.add_edge(i, j)
            idx += 1
    return g


def _sparse_k(n: int) -> int:
    """Bits needed to write n-1, i.e. the smallest k >= 1 with 2^k >= n."""
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def sparse6_encode(g: Graph) -> str:
    """Encode an undirected graph, loops and parallel edges included."""
    if g.kind.directed:
        raise GraphError("sparse6 encodes undirected graphs only")
    verts = g.vertex_list()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    k = _sparse_k(n)
    pairs = sorted(
        (
            tuple(sorted((index[g.edge_source(e)], index[g.edge_target(e)])))
            for e in g.edges()
        ),
        key=lambda p: (p[1], p[0]),  # the tracker vertex only moves forward
    )
    bits: list[int] = []
    v = 0
    for lo, hi in pairs:
        if hi == v:
            bits.append(0)
        elif hi == v + 1:
            bits.append(1)
            v += 1
        else:
            bits.append(1)
            bits.extend((hi >> s) & 1 for s in range(k - 1, -1, -1))
            v = hi
            bits.append(0)
        bits.extend((lo >> s) & 1 for s in range(k - 1, -1, -1))
    pad = (-len(bits)) % 6
    if pad and k < 6 and n == (1 << k) and pad >= k + 1 and v == n - 2:
        # all-ones padding would decode as a spurious loop at n-1
        bits.append(0)
        pad -= 1
    bits.extend([1] * pad)
    return ":" + _encode_n(n) + _pack_bits(bits)


def sparse6_decode(text: str) -> Graph:
    """Decode a sparse6 string (result permits loops and parallel edges)."""
    text = text.strip()
    if text.startswith(_S6_HEADER):
        text = text[len(_S6_HEADER) :]
    if not text.startswith(":"):
        raise ParseError("sparse6 strings start with ':'", 1, 1)
    n, pos = _decode_n(text, 1)
    bits: list[int] = []
    for i in range(pos, len(text)):
        val = _char_value(text, i)
        bits.extend((val >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    k = _sparse_k(n)
    g = AdjacencyGraph(GraphKind(allows_self_loops=True, allows_multiple_edges=True))
    for v in range(n):
        g.add_vertex(v)
    v = 0
    i = 0
    while i + k < len(bits):
        b = bits[i]
        x = 0
        for j in range(i + 1, i + 1 + k):
            x = (x << 1) | bits[j]
        i += k + 1
        if b:
            v += 1
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            g.add_edge(x, v)
    return g
