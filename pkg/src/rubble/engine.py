"""Move semantics and exact reachability decisions.

A state of the search is a pebble distribution.  Every move burns one pebble,
so the state space is a DAG graded by total pebble count, and memoizing failed
states makes depth-first search exhaustive.  Subtrees whose weight toward the
target drops below 1 are pruned: weight never increases under a move and a
pebble on the target forces weight >= 1.  Weights are exact dyadic rationals
(integer numerators over a power-of-two denominator), never floats, because
the prune threshold is exactly 1.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .budget import WorkBudget
from .errors import IllegalMoveError, MalformedError, OutOfRangeError, TooLargeError
from .graphs import DistanceTable, Graph, distances

MAX_PER_VERTEX = 1 << 16
MAX_TOTAL = 1 << 20


class MoveKind(Enum):
    PEBBLING = "pebbling"
    STRICT = "strict"


class MoveMode(Enum):
    RUBBLING = "rubbling"
    PEBBLING_ONLY = "pebbling"


@dataclass(frozen=True)
class Move:
    """A pebbling move (sources doubled, (v,v)->u) or a strict rubbling move
    ((v,w)->u with v != w).  Either way one pebble lands on the target and one
    pebble is lost."""

    kind: MoveKind
    sources: tuple[int, int]
    target: int

    def __post_init__(self):
        v, w = self.sources
        if self.kind is MoveKind.PEBBLING and v != w:
            raise IllegalMoveError("pebbling move needs a doubled source")
        if self.kind is MoveKind.STRICT and v == w:
            raise IllegalMoveError("strict move needs two distinct sources")
        if self.kind is MoveKind.STRICT and v > w:
            object.__setattr__(self, "sources", (w, v))


@dataclass(frozen=True)
class Distribution:
    """Vertex-indexed pebble counts with the total cached."""

    counts: tuple[int, ...]
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        total = 0
        for c in self.counts:
            if c < 0:
                raise OutOfRangeError("pebble counts must be nonnegative")
            if c >= MAX_PER_VERTEX:
                raise TooLargeError(f"per-vertex pebble cap is {MAX_PER_VERTEX - 1}")
            total += c
        if total > MAX_TOTAL:
            raise TooLargeError(f"total pebble cap is {MAX_TOTAL}")
        object.__setattr__(self, "size", total)

    @classmethod
    def from_items(cls, n: int, items) -> "Distribution":
        counts = [0] * n
        for v, c in dict(items).items():
            if not 0 <= v < n:
                raise OutOfRangeError(f"vertex {v} out of range")
            counts[v] = c
        return cls(tuple(counts))

    def support(self) -> list[int]:
        return [v for v, c in enumerate(self.counts) if c]

    def add(self, v: int, amount: int = 1) -> "Distribution":
        counts = list(self.counts)
        counts[v] += amount
        return Distribution(tuple(counts))

    def to_sparse(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.counts) if c}


def parse_distribution(g: Graph, text: str) -> Distribution:
    """Parse "vertex:count,vertex:count,..." where vertices are labels or
    indices; commas inside "(i,j)" labels do not split items."""
    items = []
    depth = 0
    start = 0
    stripped = text.strip()
    if not stripped:
        return Distribution((0,) * g.n)
    for pos, ch in enumerate(stripped + ","):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            items.append(stripped[start:pos])
            start = pos + 1
    counts = [0] * g.n
    for item in items:
        name, sep, raw = item.rpartition(":")
        if not sep:
            raise MalformedError(f"distribution item {item!r} needs vertex:count")
        try:
            c = int(raw)
        except ValueError:
            raise MalformedError(f"bad pebble count in {item!r}") from None
        counts[g.vertex_by_label(name.strip())] += c
    return Distribution(tuple(counts))


def format_distribution(g: Graph, p: Distribution) -> str:
    return ",".join(f"{g.label_of(v)}:{c}" for v, c in enumerate(p.counts) if c)


_distances_cached = lru_cache(maxsize=None)(distances)


def graph_distances(g: Graph) -> DistanceTable:
    """Cached all-pairs distances (graphs are immutable)."""
    return _distances_cached(g)


@lru_cache(maxsize=None)
def _move_catalog(g: Graph, mode: MoveMode) -> tuple[Move, ...]:
    """All structurally possible moves, sorted by (target, sources)."""
    moves = []
    for u in range(g.n):
        nbrs = g.neighbors(u)
        for v in nbrs:
            moves.append(Move(MoveKind.PEBBLING, (v, v), u))
        if mode is MoveMode.RUBBLING:
            for a in range(len(nbrs)):
                for b in range(a + 1, len(nbrs)):
                    moves.append(Move(MoveKind.STRICT, (nbrs[a], nbrs[b]), u))
    moves.sort(key=lambda m: (m.target, m.sources))
    return tuple(moves)


def legal_moves(g: Graph, p: Distribution, mode: MoveMode = MoveMode.RUBBLING) -> list[Move]:
    """Moves executable right now from p, in (target, sources) order."""
    if len(p.counts) != g.n:
        raise OutOfRangeError("distribution does not match the graph")
    out = []
    counts = p.counts
    for m in _move_catalog(g, mode):
        v, w = m.sources
        if (counts[v] >= 2) if v == w else (counts[v] >= 1 and counts[w] >= 1):
            out.append(m)
    return out


def apply_move(p: Distribution, m: Move) -> Distribution:
    """One move applied; total size drops by exactly one."""
    counts = list(p.counts)
    v, w = m.sources
    counts[v] -= 1
    counts[w] -= 1
    counts[m.target] += 1
    if counts[v] < 0 or counts[w] < 0:
        raise IllegalMoveError(f"not enough pebbles for {m}")
    return Distribution(tuple(counts))


def weight(g: Graph, p: Distribution, x: int) -> Fraction:
    """Sum over pebbles of 2**(-distance to x), computed exactly."""
    row = graph_distances(g).dist[x]
    return sum(
        (Fraction(c, 1 << row[v]) for v, c in enumerate(p.counts) if c),
        start=Fraction(0),
    )


@lru_cache(maxsize=None)
def _search_plan(g: Graph, mode: MoveMode, x: int):
    """Per-target search tables: scaled weight coefficients (threshold =
    coefficient at x itself) and the move catalog ordered by decreasing
    weight of the resulting state."""
    row = graph_distances(g).dist[x]
    ecc = max(row)
    coeff = tuple(1 << (ecc - d) for d in row)
    threshold = 1 << ecc
    ordered = []
    for m in _move_catalog(g, mode):
        v, w = m.sources
        delta = coeff[m.target] - coeff[v] - coeff[w]
        ordered.append((delta, m))
    ordered.sort(key=lambda t: (-t[0], t[1].target, t[1].sources))
    return coeff, threshold, tuple(ordered)


def reachable(
    g: Graph,
    p: Distribution,
    x: int,
    mode: MoveMode = MoveMode.RUBBLING,
    *,
    prune: bool = True,
    budget: WorkBudget | None = None,
):
    """Decide whether some executable move sequence puts a pebble on x.

    Returns (answer, certificate); the certificate records the executed move
    sequence and is None on a negative answer.  The search is exhaustive:
    depth-first over distributions, memoizing failed states, trying moves in
    order of decreasing weight of the resulting state, and (optionally)
    pruning states whose weight toward x is below 1.
    """
    from .certificates import Certificate

    if len(p.counts) != g.n or not 0 <= x < g.n:
        raise OutOfRangeError("distribution or target does not match the graph")
    if p.counts[x] >= 1:
        return True, Certificate(moves=(), initial=p, target=x)
    coeff, threshold, ordered = _search_plan(g, mode, x)
    start = p.counts
    w0 = sum(c * coeff[v] for v, c in enumerate(start) if c)
    if budget is not None:
        budget.charge()
    if prune and w0 < threshold:
        return False, None

    failed: set[tuple[int, ...]] = set()
    path: list[Move] = []
    stack = [(start, w0, iter(ordered))]
    while stack:
        counts, wgt, it = stack[-1]
        pushed = False
        for delta, m in it:
            nw = wgt + delta
            if prune and nw < threshold:
                break  # moves sorted by delta: everything later prunes too
            v, w = m.sources
            if not ((counts[v] >= 2) if v == w else (counts[v] >= 1 and counts[w] >= 1)):
                continue
            nxt = list(counts)
            nxt[v] -= 1
            nxt[w] -= 1
            nxt[m.target] += 1
            succ = tuple(nxt)
            if succ in failed:
                continue
            path.append(m)
            if succ[x] >= 1:
                return True, Certificate(moves=tuple(path), initial=p, target=x)
            if budget is not None:
                budget.charge()
            stack.append((succ, nw, iter(ordered)))
            pushed = True
            break
        if not pushed:
            failed.add(counts)
            stack.pop()
            if path:
                path.pop()
    return False, None


def reaches_all(
    g: Graph,
    p: Distribution,
    mode: MoveMode = MoveMode.RUBBLING,
    *,
    budget: WorkBudget | None = None,
) -> bool:
    """True iff every vertex is reachable from p.  Targets are tried in order
    of increasing weight so a hopeless target fails fast."""
    order = sorted(range(g.n), key=lambda x: (weight(g, p, x), x))
    return all(reachable(g, p, x, mode, budget=budget)[0] for x in order)


def _compositions(total: int, parts: int):
    """All count tuples summing to total, in ascending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


class ReachabilityLevels:
    """Bottom-up solvability table.

    level(k) maps every distribution of size k to the bitmask of targets
    reachable from it: a pebble already on x sets bit x, and every legal move
    inherits the mask of its successor one level down.  Shared across queries,
    this answers "which size-k distributions solve which targets" wholesale,
    which is what the rubbling-number scans need.
    """

    def __init__(self, g: Graph, mode: MoveMode = MoveMode.RUBBLING, budget: WorkBudget | None = None):
        self.g = g
        self.mode = mode
        self.budget = budget
        self.full_mask = (1 << g.n) - 1
        self._moves = tuple((m.sources[0], m.sources[1], m.target) for m in _move_catalog(g, mode))
        self._levels: list[dict[tuple[int, ...], int]] = [{(0,) * g.n: 0}]

    def level(self, k: int) -> dict[tuple[int, ...], int]:
        while len(self._levels) <= k:
            self._grow()
        return self._levels[k]

    def _grow(self):
        k = len(self._levels)
        prev = self._levels[-1]
        moves = self._moves
        n = self.g.n
        full = self.full_mask
        budget = self.budget
        cur: dict[tuple[int, ...], int] = {}
        for counts in _compositions(k, n):
            if budget is not None:
                budget.charge()
            mask = 0
            for v in range(n):
                if counts[v]:
                    mask |= 1 << v
            for v, w, u in moves:
                if (counts[v] >= 2) if v == w else (counts[v] >= 1 and counts[w] >= 1):
                    nxt = list(counts)
                    nxt[v] -= 1
                    nxt[w] -= 1
                    nxt[u] += 1
                    mask |= prev[tuple(nxt)]
                    if mask == full:
                        break
            cur[counts] = mask
        self._levels.append(cur)
