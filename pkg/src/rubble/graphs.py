"""Dense graph representation, metric computations, and graph6 interchange.

Vertices are the integers 0..n-1.  Adjacency is stored as one bitmask per
vertex so that neighbourhood tests and BFS sweeps are single-word operations;
the 64-vertex cap keeps every mask inside one machine word.  Graphs are
immutable, simple, and always connected.
"""

import json
from dataclasses import dataclass

from .errors import (
    DisconnectedError,
    MalformedError,
    OutOfRangeError,
    SelfLoopError,
    TooLargeError,
)

MAX_VERTICES = 64
GRAPH6_MAX = 62  # short-form graph6 records only
CANONICAL_MAX = 8  # brute-force canonical labelling cap


def _bits(mask: int):
    """Yield the set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph with optional vertex display labels."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRangeError("graph needs at least one vertex")
        if self.n > MAX_VERTICES:
            raise TooLargeError(f"at most {MAX_VERTICES} vertices supported")
        if len(self.adj) != self.n:
            raise OutOfRangeError("adjacency length must equal vertex count")
        if self.labels is not None and len(self.labels) != self.n:
            raise OutOfRangeError("label count must equal vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise OutOfRangeError(f"neighbour of {v} out of range")
            if mask >> v & 1:
                raise SelfLoopError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                if not self.adj[u] >> v & 1:
                    raise OutOfRangeError(f"adjacency not symmetric at {{{u},{v}}}")
        if not _connected(self.n, self.adj):
            raise DisconnectedError("graph is not connected")

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_by_label(self, name: str) -> int:
        """Resolve a display label, falling back to a plain integer index."""
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        try:
            v = int(name)
        except ValueError:
            raise OutOfRangeError(f"unknown vertex {name!r}") from None
        if not 0 <= v < self.n:
            raise OutOfRangeError(f"vertex index {v} out of range")
        return v


def _connected(n: int, adj: tuple[int, ...]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def from_edge_list(
    n: int, edges, labels: tuple[str, ...] | list[str] | None = None
) -> Graph:
    """Build a graph from vertex pairs; duplicates are merged, loops rejected."""
    if n < 1:
        raise OutOfRangeError("graph needs at least one vertex")
    if n > MAX_VERTICES:
        raise TooLargeError(f"at most {MAX_VERTICES} vertices supported")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u},{v}) out of range")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def to_edge_json(g: Graph) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def from_edge_json(doc) -> Graph:
    """Parse the {"n":…, "edges":…, "labels":…} interchange document."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedError(f"bad edge-list JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise MalformedError('edge-list JSON needs "n" and "edges" fields')
    return from_edge_list(doc["n"], [tuple(e) for e in doc["edges"]], doc.get("labels"))


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop distances of a connected graph."""

    dist: tuple[tuple[int, ...], ...]
    diameter: int


def distances(g: Graph) -> DistanceTable:
    """BFS-exact hop distances from every vertex."""
    rows = []
    for s in range(g.n):
        dist = [0] * g.n
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            for v in _bits(frontier):
                dist[v] = d
        rows.append(tuple(dist))
    return DistanceTable(tuple(rows), max(max(r) for r in rows))


# -- graph6 ------------------------------------------------------------------
#
# Standard short-form encoding: one byte n+63, then the upper triangle of the
# adjacency matrix in column-major order (0,1),(0,2),(1,2),(0,3),... packed
# into 6-bit groups, each group emitted as chr(group+63).


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX:
        raise TooLargeError(f"graph6 short form holds at most {GRAPH6_MAX} vertices")
    chars = [chr(g.n + 63)]
    group = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        chars.append(chr((group << (6 - nbits)) + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Parse a one-line short-form graph6 record into a connected graph."""
    rec = text.strip()
    if rec.startswith(">>graph6<<"):
        rec = rec[len(">>graph6<<") :]
    if not rec:
        raise MalformedError("empty graph6 record")
    vals = []
    for ch in rec:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise MalformedError(f"invalid graph6 byte {ch!r}")
        vals.append(o - 63)
    if vals[0] == 63:
        raise TooLargeError("long-form graph6 records (n > 62) not supported")
    n = vals[0]
    if n == 0:
        raise MalformedError("graph6 record encodes an empty graph")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[1:]
    if len(body) != need:
        raise MalformedError(
            f"graph6 record for n={n} needs {need} data bytes, got {len(body)}"
        )
    bitstream = 0
    for v in body:
        bitstream = bitstream << 6 | v
    total = 6 * need
    pad = total - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise MalformedError("graph6 padding bits must be zero")
    edges = []
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return from_edge_list(n, edges)


# -- canonical form ----------------------------------------------------------


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: the minimum, over all vertex relabelings, of
    the upper-triangle adjacency bit string, prefixed with the vertex count.

    Brute-force branch and bound over partial placements; capped at
    CANONICAL_MAX vertices.
    """
    if g.n > CANONICAL_MAX:
        raise TooLargeError(f"canonical_form supports at most {CANONICAL_MAX} vertices")
    n, adj = g.n, g.adj
    if n == 1:
        return bytes([1])

    best: list[int] | None = None  # best[d-1] = d-bit column written at depth d

    def prefix_beats_best(cols: list[int], col: int, depth: int) -> bool:
        # True iff cols + [col] is lexicographically greater than best[:depth],
        # in which case no completion of this placement can be the minimum.
        for i in range(depth - 1):
            if cols[i] != best[i]:
                return cols[i] > best[i]
        return col > best[depth - 1]

    def extend(placed: list[int], used: int, cols: list[int]):
        nonlocal best
        depth = len(placed)
        if depth == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        cands = []
        for v in range(n):
            if used >> v & 1:
                continue
            av = adj[v]
            col = 0
            for p in placed:
                col = col << 1 | (av >> p & 1)
            cands.append((col, v))
        cands.sort()
        for col, v in cands:
            if best is not None and prefix_beats_best(cols, col, depth):
                break  # candidates are sorted, so the rest lose as well
            placed.append(v)
            cols.append(col)
            extend(placed, used | 1 << v, cols)
            placed.pop()
            cols.pop()

    for v0 in range(n):
        extend([v0], 1 << v0, [])
    assert best is not None

    acc = 0
    for depth, col in enumerate(best, start=1):
        acc = acc << depth | col
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    acc <<= nbytes * 8 - nbits
    return bytes([n]) + acc.to_bytes(nbytes, "big")
