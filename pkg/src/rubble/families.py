"""Constructors for the named graph families, with coordinate vertex labels.

The triangular families live on coordinate pairs (i,j) with 1 <= i <= j <= s;
two vertices are adjacent when they share a coordinate.  The modified family
deletes alternate off-spine vertices and rewires the spine, and the diameter-2
extremal family grows it one column-0 vertex at a time.  Labels follow the
"(i,j)" coordinate notation so CLI targets can be addressed the same way.
"""

from dataclasses import dataclass
from math import isqrt

from .engine import Distribution
from .errors import MalformedError, OutOfRangeError, TooLargeError
from .graphs import Graph, from_edge_list


def path(n: int) -> Graph:
    if n < 1:
        raise OutOfRangeError("path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise OutOfRangeError("complete graph needs at least one vertex")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _coordinate_graph(coords: list[tuple[int, int]], extra_edges=()) -> Graph:
    """Graph on coordinate pairs: adjacent iff equal first or second coordinate."""
    index = {c: k for k, c in enumerate(coords)}
    edges = []
    for a, (i1, j1) in enumerate(coords):
        for b in range(a + 1, len(coords)):
            i2, j2 = coords[b]
            if i1 == i2 or j1 == j2:
                edges.append((a, b))
    for c1, c2 in extra_edges:
        edges.append((index[c1], index[c2]))
    labels = [f"({i},{j})" for i, j in coords]
    return from_edge_list(len(coords), edges, labels)


def h_graph(s: int) -> Graph:
    if s < 1:
        raise OutOfRangeError("parameter must be positive")
    coords = [(i, j) for i in range(1, s + 1) for j in range(i, s + 1)]
    coords.sort()
    return _coordinate_graph(coords)


def _h_prime_parts(s: int):
    """Deleted vertices and added spine edges for the modified triangular graph.

    Deletions walk (s-1,s), (s-3,s-2), ... downwards, stopping at (2,3) for odd
    s and (3,4) for even s; both lists are empty for s <= 2.  Each added edge
    joins consecutive spine vertices {(a,a),(a-1,a-1)} for a = s, s-2, ...
    """
    stop = 2 if s % 2 else 3
    deleted = [(i, i + 1) for i in range(s - 1, stop - 1, -2)]
    edge_stop = 3 if s % 2 else 4
    added = [((a, a), (a - 1, a - 1)) for a in range(s, edge_stop - 1, -2)]
    return deleted, added


def h_prime(s: int) -> Graph:
    if s < 1:
        raise OutOfRangeError("parameter must be positive")
    deleted, added = _h_prime_parts(s)
    gone = set(deleted)
    coords = [(i, j) for i in range(1, s + 1) for j in range(i, s + 1) if (i, j) not in gone]
    coords.sort()
    return _coordinate_graph(coords, added)


def h_prime_order(s: int) -> int:
    """Vertex count of the modified triangular graph: s(s+1)/2 - floor((s-1)/2)."""
    return s * (s + 1) // 2 - (s - 1) // 2


def g_n(n: int) -> Graph:
    """Diameter-2 family member on n vertices (n >= 3).

    Starts from the modified triangular graph with s = isqrt(2n-1) rows and,
    when that leaves fewer than n vertices, appends vertices (0,s),(0,s-1),...
    A vertex (0,j) is adjacent to (i',j') iff i'=0 or j=j'.
    """
    if n < 3:
        raise OutOfRangeError("family defined for n >= 3")
    s = isqrt(2 * n - 1)
    base = h_prime_order(s)
    extra = n - base
    if extra == 0:
        return h_prime(s)
    lowest_new = 1 if s % 2 else 2
    if not (0 < extra <= s - lowest_new + 1):
        raise OutOfRangeError(f"no family member with {n} vertices")
    deleted, added = _h_prime_parts(s)
    gone = set(deleted)
    coords = [(i, j) for i in range(1, s + 1) for j in range(i, s + 1) if (i, j) not in gone]
    coords.sort()
    new = [(0, j) for j in range(s - extra + 1, s + 1)]
    allc = coords + new
    index = {c: k for k, c in enumerate(allc)}
    edges = []
    for a, (i1, j1) in enumerate(coords):
        for b in range(a + 1, len(coords)):
            i2, j2 = coords[b]
            if i1 == i2 or j1 == j2:
                edges.append((a, b))
    for c1, c2 in added:
        edges.append((index[c1], index[c2]))
    for _, j in new:
        a = index[(0, j)]
        for c in allc:
            i2, j2 = c
            b = index[c]
            if b != a and (i2 == 0 or j2 == j):
                edges.append((min(a, b), max(a, b)))
    labels = [f"({i},{j})" for i, j in allc]
    return from_edge_list(n, edges, labels)


def grid_power(d: int) -> Graph:
    """d-dimensional grid on side 2**d: vertices share all but one coordinate."""
    if d < 0:
        raise OutOfRangeError("dimension must be nonnegative")
    if d > 2:
        raise TooLargeError("grid family exceeds the vertex cap for d > 2")
    if d == 0:
        return from_edge_list(1, [], labels=["(1)"])
    side = 2**d
    verts = []

    def fill(prefix):
        if len(prefix) == d:
            verts.append(tuple(prefix))
            return
        for c in range(1, side + 1):
            fill(prefix + [c])

    fill([])
    index = {v: k for k, v in enumerate(verts)}
    edges = []
    for a, va in enumerate(verts):
        for b in range(a + 1, len(verts)):
            vb = verts[b]
            if sum(x != y for x, y in zip(va, vb)) == 1:
                edges.append((a, b))
    labels = ["(" + ",".join(map(str, v)) + ")" for v in verts]
    return from_edge_list(len(verts), edges, labels)


def gn_witness(n: int) -> tuple[Graph, Distribution, int]:
    """Adversarial placement on the diameter-2 family: one pebble on each inner
    spine vertex (i,i) for 1 < i < k and three on (k,k), k = isqrt(2n-1).  The
    returned target (1,1) is not reachable from it."""
    g = g_n(n)
    k = isqrt(2 * n - 1)
    counts = [0] * g.n
    for i in range(2, k):
        counts[g.vertex_by_label(f"({i},{i})")] = 1
    counts[g.vertex_by_label(f"({k},{k})")] = 3
    return g, Distribution(tuple(counts)), g.vertex_by_label("(1,1)")


FAMILY_KINDS = ("path", "complete", "h", "hprime", "gn", "grid")


@dataclass(frozen=True)
class FamilySpec:
    """Parsed "kind:parameter" family name, e.g. "gn:9" or "grid:2"."""

    kind: str
    parameter: int

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, sep, raw = text.partition(":")
        if not sep or kind not in FAMILY_KINDS:
            raise MalformedError(f"unknown family spec {text!r}")
        try:
            parameter = int(raw)
        except ValueError:
            raise MalformedError(f"bad family parameter in {text!r}") from None
        return cls(kind, parameter)

    def build(self) -> Graph:
        builders = {
            "path": path,
            "complete": complete,
            "h": h_graph,
            "hprime": h_prime,
            "gn": g_n,
            "grid": grid_power,
        }
        return builders[self.kind](self.parameter)

    def __str__(self) -> str:
        return f"{self.kind}:{self.parameter}"
