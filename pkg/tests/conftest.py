"""Shared fixtures: the exhaustive small-graph sweep reused by several suites.

The sweep covers every connected graph with at most 5 vertices and every
distribution of at most 5 pebbles.  For each (graph, distribution, target) it
records the pruned depth-first verdict with its certificate next to the
unpruned level-table verdict, so equivalence, certificate and quotient
properties can all read one precomputed table.
"""

from dataclasses import dataclass

import pytest

from rubble.certificates import Certificate
from rubble.engine import Distribution, MoveMode, ReachabilityLevels, reachable
from rubble.graphs import Graph
from rubble.survey import enumerate_connected

SWEEP_MAX_N = 5
SWEEP_MAX_PEBBLES = 5


@dataclass
class SweepEntry:
    graph: Graph
    counts: tuple[int, ...]
    target: int
    dp_reachable: bool
    dfs_reachable: bool
    certificate: Certificate | None


@pytest.fixture(scope="session")
def small_graphs() -> dict[int, list[Graph]]:
    return {n: list(enumerate_connected(n)) for n in range(1, 7)}


@pytest.fixture(scope="session")
def sweep(small_graphs) -> list[SweepEntry]:
    entries = []
    for n in range(1, SWEEP_MAX_N + 1):
        for g in small_graphs[n]:
            levels = ReachabilityLevels(g, MoveMode.RUBBLING)
            for k in range(SWEEP_MAX_PEBBLES + 1):
                for counts, mask in levels.level(k).items():
                    for x in range(n):
                        ok, cert = reachable(g, Distribution(counts), x)
                        entries.append(
                            SweepEntry(g, counts, x, bool(mask >> x & 1), ok, cert)
                        )
    return entries
