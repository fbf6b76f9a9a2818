"""Independent verification of move sequences.

A certificate is an ordered move sequence together with its starting
distribution and target.  Verification replays it with its own arithmetic
(never the engine's) and cross-checks the order-independent net effect of the
move multiset via the transition digraph, in which every move contributes two
directed edges into its target.
"""

import json
from collections import Counter
from dataclasses import dataclass

from .engine import Distribution, Move, MoveKind
from .errors import InvalidMoveError, MalformedError, NotOrderableError
from .graphs import Graph, from_edge_json, to_edge_json


@dataclass(frozen=True)
class Certificate:
    """Witness of reachability: replaying moves from initial keeps every count
    nonnegative and ends with a pebble on target."""

    moves: tuple[Move, ...]
    initial: Distribution
    target: int


@dataclass(frozen=True)
class TransitionDigraph:
    """Directed multigraph of a move multiset; in-degrees are always even."""

    n: int
    edges: tuple[tuple[int, int], ...]
    in_degree: tuple[int, ...]
    out_degree: tuple[int, ...]


def _move_valid(g: Graph, m: Move) -> bool:
    v, w = m.sources
    if m.kind is MoveKind.PEBBLING:
        return v == w and g.has_edge(v, m.target)
    return v != w and g.has_edge(v, m.target) and g.has_edge(w, m.target)


def transition_digraph(g: Graph, moves) -> TransitionDigraph:
    edges = []
    indeg = [0] * g.n
    outdeg = [0] * g.n
    for m in moves:
        if not _move_valid(g, m):
            raise InvalidMoveError(f"move {m} is not valid on this graph")
        for s in m.sources:
            edges.append((s, m.target))
            outdeg[s] += 1
            indeg[m.target] += 1
    edges.sort()
    return TransitionDigraph(g.n, tuple(edges), tuple(indeg), tuple(outdeg))


def net_effect(p: Distribution, moves) -> tuple[int, ...]:
    """Order-independent pebble function after the multiset: for every vertex,
    p(v) + in(v)/2 - out(v).  May be negative; that is allowed."""
    counts = list(p.counts)
    for m in moves:
        for s in m.sources:
            counts[s] -= 1
        counts[m.target] += 1
    return tuple(counts)


def is_balanced(p: Distribution, moves) -> bool:
    return all(c >= 0 for c in net_effect(p, moves))


def is_acyclic(t: TransitionDigraph) -> bool:
    """True iff the digraph has no directed cycle (multiplicities ignored,
    2-cycles and self-loops count as cycles)."""
    succs: dict[int, set[int]] = {}
    indeg = [0] * t.n
    for a, b in set(t.edges):
        succs.setdefault(a, set()).add(b)
        indeg[b] += 1
    queue = [v for v in range(t.n) if indeg[v] == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for u in succs.get(v, ()):
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    return removed == t.n


def _sort_key(m: Move):
    return (m.target, m.sources, m.kind.value)


def order_acyclic(p: Distribution, moves) -> list[Move]:
    """Order a balanced acyclic multiset into a sequence executable from p.

    Repeatedly extracts a currently affordable move, preferring initial moves
    of the remaining multiset (both sources with zero in-degree).  Raises
    NotOrderableError when stuck, which signals a violated precondition.
    """
    remaining = Counter(moves)
    counts = list(p.counts)
    ordered: list[Move] = []
    while remaining:
        indeg: Counter = Counter()
        for m, mult in remaining.items():
            indeg[m.target] += 2 * mult
        affordable = []
        for m in remaining:
            v, w = m.sources
            ok = counts[v] >= 2 if v == w else counts[v] >= 1 and counts[w] >= 1
            if ok:
                affordable.append(m)
        if not affordable:
            raise NotOrderableError("no affordable move; multiset not balanced acyclic")
        initial = [m for m in affordable if indeg[m.sources[0]] == 0 and indeg[m.sources[1]] == 0]
        pick = min(initial or affordable, key=_sort_key)
        v, w = pick.sources
        counts[v] -= 1
        counts[w] -= 1
        counts[pick.target] += 1
        ordered.append(pick)
        remaining[pick] -= 1
        if remaining[pick] == 0:
            del remaining[pick]
    return ordered


def verify(g: Graph, c: Certificate) -> bool:
    """Replay the certificate: every move valid on g, every prefix nonnegative,
    a pebble on the target at the end.  The move multiset's balance is checked
    as well, cross-checking replay against the order-independent net effect."""
    if len(c.initial.counts) != g.n or not 0 <= c.target < g.n:
        return False
    counts = list(c.initial.counts)
    for m in c.moves:
        if not _move_valid(g, m):
            return False
        v, w = m.sources
        counts[v] -= 1
        counts[w] -= 1
        if counts[v] < 0 or counts[w] < 0:
            return False
        counts[m.target] += 1
    if counts[c.target] < 1:
        return False
    if not is_balanced(c.initial, c.moves):  # implied by replay; cross-check
        return False
    return tuple(counts) == net_effect(c.initial, c.moves)


# -- JSON interchange ----------------------------------------------------------


def certificate_to_json(c: Certificate) -> dict:
    return {
        "initial": {str(v): cnt for v, cnt in c.initial.to_sparse().items()},
        "target": c.target,
        "moves": [
            {"kind": m.kind.value, "sources": list(m.sources), "target": m.target}
            for m in c.moves
        ],
    }


def certificate_from_json(doc: dict, n: int) -> Certificate:
    try:
        initial = Distribution.from_items(
            n, {int(v): cnt for v, cnt in doc["initial"].items()}
        )
        moves = tuple(
            Move(MoveKind(m["kind"]), tuple(m["sources"]), m["target"])
            for m in doc["moves"]
        )
        return Certificate(moves=moves, initial=initial, target=doc["target"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedError(f"bad certificate JSON: {exc}") from None


def save_certificate(path, g: Graph, c: Certificate) -> None:
    doc = {"graph": to_edge_json(g), "certificate": certificate_to_json(c)}
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")


def load_certificate(path) -> tuple[Graph, Certificate]:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedError(f"bad certificate file: {exc}") from None
    if "graph" not in doc or "certificate" not in doc:
        raise MalformedError('certificate file needs "graph" and "certificate"')
    g = from_edge_json(doc["graph"])
    return g, certificate_from_json(doc["certificate"], g.n)
