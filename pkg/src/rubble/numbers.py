"""Exact rubbling numbers, optimal rubbling numbers, and closed-form bounds.

The rubbling number is found by scanning distribution sizes upward from the
2**diameter lower bound until every distribution of that size solves every
target; monotonicity (extra pebbles never hurt) makes the first such size the
answer.  The optimal number scans upward from ceil((d+2)/2) until some
distribution of that size solves everything.  Both scans read the engine's
level table, so one pass decides all distributions of a size at once.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .budget import WorkBudget
from .engine import (
    Distribution,
    MoveMode,
    ReachabilityLevels,
    graph_distances,
    reaches_all,
)
from .errors import NotATreeError
from .families import path
from .graphs import Graph


@dataclass(frozen=True)
class RhoResult:
    value: int
    witness_unsolvable: Distribution | None
    witness_target: int | None


def _first_failure(level: dict, full: int):
    for counts, mask in level.items():  # insertion order is ascending lex
        if mask != full:
            unreached = ~mask & full
            missing = (unreached & -unreached).bit_length() - 1
            return counts, missing
    return None


def rho_detail(
    g: Graph, mode: MoveMode = MoveMode.RUBBLING, budget: WorkBudget | None = None
) -> RhoResult:
    d = graph_distances(g).diameter
    levels = ReachabilityLevels(g, mode, budget)
    full = levels.full_mask
    m = 2**d
    last_failure = None
    while True:
        failure = _first_failure(levels.level(m), full)
        if failure is None:
            if last_failure is None and m > 0:
                last_failure = _first_failure(levels.level(m - 1), full)
            witness, target = last_failure if last_failure else (None, None)
            return RhoResult(
                m,
                Distribution(witness) if witness is not None else None,
                target,
            )
        last_failure = failure
        m += 1


def rubbling_number(
    g: Graph, mode: MoveMode = MoveMode.RUBBLING, budget: WorkBudget | None = None
) -> int:
    """Least m such that every size-m distribution reaches every vertex."""
    return rho_detail(g, mode, budget).value


def optimal_rubbling_number(
    g: Graph, mode: MoveMode = MoveMode.RUBBLING, budget: WorkBudget | None = None
) -> tuple[int, Distribution]:
    """Least size of some distribution reaching every vertex, with a witness."""
    d = graph_distances(g).diameter
    levels = ReachabilityLevels(g, mode, budget)
    full = levels.full_mask
    k = (d + 3) // 2
    while True:
        for counts, mask in levels.level(k).items():
            if mask == full:
                return k, Distribution(counts)
        k += 1


@dataclass(frozen=True)
class BoundReport:
    """Every closed-form bound evaluated for one graph, plus exact values when
    they were computed.  f(n,2) bounds apply to diameter-2 graphs only."""

    n: int
    d: int
    rho_lower: int
    rho_upper: int
    rho_opt_lower: int
    rho_opt_upper: int
    f_n2_lower: int | None
    f_n2_upper: float | None
    exact_rho: int | None = None
    exact_rho_opt: int | None = None

    def rho_consistent(self) -> bool | None:
        if self.exact_rho is None:
            return None
        return self.rho_lower <= self.exact_rho <= self.rho_upper

    def rho_opt_consistent(self) -> bool | None:
        if self.exact_rho_opt is None:
            return None
        return self.rho_opt_lower <= self.exact_rho_opt <= self.rho_opt_upper

    def to_json(self) -> dict:
        doc = {
            "n": self.n,
            "d": self.d,
            "rho_lower": self.rho_lower,
            "rho_upper": self.rho_upper,
            "rho_opt_lower": self.rho_opt_lower,
            "rho_opt_upper": self.rho_opt_upper,
        }
        if self.f_n2_lower is not None:
            doc["f_n2_lower"] = self.f_n2_lower
            doc["f_n2_upper"] = self.f_n2_upper
        if self.exact_rho is not None:
            doc["exact_rho"] = self.exact_rho
            doc["rho_consistent"] = self.rho_consistent()
        if self.exact_rho_opt is not None:
            doc["exact_rho_opt"] = self.exact_rho_opt
            doc["rho_opt_consistent"] = self.rho_opt_consistent()
        return doc


def rho_upper_bound(n: int, d: int) -> int:
    """(n-d+1)(2^(d-1)-1)+2, evaluated exactly and clamped to >= 1 (the d=0
    case evaluates below 2 and the formula's derivation assumes n >= 2)."""
    f = (n - d + 1) * (Fraction(2) ** (d - 1) - 1) + 2
    f = max(f, Fraction(1))
    assert f.denominator == 1
    return int(f)


def bound_report(
    g: Graph, exact_rho: int | None = None, exact_rho_opt: int | None = None
) -> BoundReport:
    n = g.n
    d = graph_distances(g).diameter
    f_lo = isqrt(2 * n - 1) + 2 if d == 2 else None
    f_hi = math.sqrt(2 * n - 1) + 5 if d == 2 else None
    return BoundReport(
        n=n,
        d=d,
        rho_lower=2**d,
        rho_upper=rho_upper_bound(n, d),
        rho_opt_lower=(d + 3) // 2,
        rho_opt_upper=min(2**d, (n + 2) // 2),
        f_n2_lower=f_lo,
        f_n2_upper=f_hi,
        exact_rho=exact_rho,
        exact_rho_opt=exact_rho_opt,
    )


# -- constructive tree distribution --------------------------------------------


def _farthest(adj: dict[int, set[int]], src: int):
    dist = {src: 0}
    parent: dict[int, int | None] = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for u in sorted(frontier):
            for w in sorted(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    far = max(dist, key=lambda v: (dist[v], -v))
    return far, parent


def _tree_distribution(adj: dict[int, set[int]]) -> dict[int, int]:
    n = len(adj)
    if n == 1:
        (v,) = adj
        return {v: 1}
    if n == 2:
        return {v: 1 for v in adj}
    a, _ = _farthest(adj, min(adj))
    b, parent = _farthest(adj, a)
    chain = [b]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    chain.reverse()
    v1, v2, v3 = chain[0], chain[1], chain[2]
    if len(adj[v2]) == 2:
        sub = {u: nb - {v1, v2} for u, nb in adj.items() if u not in (v1, v2)}
        q = _tree_distribution(sub)
        q[v1] = 1
        q[v2] = 0
        return q
    w = min(x for x in adj[v2] if x not in (v1, v3))
    # the chosen path is longest, so w cannot start anything longer: a leaf
    sub = {u: nb - {v1, w} for u, nb in adj.items() if u not in (v1, w)}
    q = _tree_distribution(sub)
    q[v2] = q.get(v2, 0) + 1
    q[v1] = 0
    q[w] = 0
    return q


def tree_optimal_distribution(g: Graph, budget: WorkBudget | None = None) -> Distribution:
    """Distribution of size exactly ceil((n+1)/2) reaching every vertex of a
    tree, built by peeling two vertices at a time off a longest path."""
    if g.edge_count() != g.n - 1:
        raise NotATreeError("graph has a cycle")
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    placed = _tree_distribution(adj)
    counts = [0] * g.n
    for v, c in placed.items():
        counts[v] = c
    dist = Distribution(tuple(counts))
    assert dist.size == (g.n + 2) // 2
    assert reaches_all(g, dist, MoveMode.RUBBLING, budget=budget)
    return dist


def quotient_to_path(g: Graph, v0: int, p: Distribution) -> tuple[Graph, Distribution]:
    """Collapse BFS levels from v0 onto a path, summing pebbles per level.
    Reachability in g implies reachability of the collapsed target."""
    row = graph_distances(g).dist[v0]
    ecc = max(row)
    counts = [0] * (ecc + 1)
    for v, c in enumerate(p.counts):
        counts[row[v]] += c
    return path(ecc + 1), Distribution(tuple(counts))
