"""Maximum rubbling numbers over all connected graphs of given order/diameter.

The internal enumerator produces one representative per isomorphism class by
repeatedly attaching a new vertex (with every nonempty neighbourhood) to each
smaller connected graph and deduplicating on canonical form; every connected
graph has a non-cut vertex, so nothing is missed.  Larger orders must come
from an externally generated graph6 stream, the same way the original survey
consumed an external enumerator.
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .budget import WorkBudget
from .engine import MoveMode
from .errors import OutOfRangeError, TooLargeError
from .graphs import Graph, canonical_form, distances, parse_graph6, write_graph6
from .numbers import rubbling_number

ENUMERATOR_MAX = 7

_connected_cache: dict[int, list[Graph]] = {}


def _connected_graphs(n: int) -> list[Graph]:
    if n in _connected_cache:
        return _connected_cache[n]
    if n == 1:
        result = [Graph(1, (0,))]
    else:
        seen: dict[bytes, Graph] = {}
        for g in _connected_graphs(n - 1):
            for nb in range(1, 1 << (n - 1)):
                adj = [m | ((nb >> v & 1) << (n - 1)) for v, m in enumerate(g.adj)]
                adj.append(nb)
                cand = Graph(n, tuple(adj))
                key = canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        result = [g for _, g in sorted(seen.items())]
    _connected_cache[n] = result
    return result


def enumerate_connected(n: int, diameter: int | None = None):
    """Every isomorphism class of connected n-vertex graphs exactly once,
    optionally filtered by diameter.  Internal enumeration caps at n = 7."""
    if n > ENUMERATOR_MAX:
        raise TooLargeError(f"internal enumerator caps at {ENUMERATOR_MAX} vertices")
    for g in _connected_graphs(n):
        if diameter is None or distances(g).diameter == diameter:
            yield g


@dataclass(frozen=True)
class SurveyResult:
    n: int
    d: int
    f_value: int
    argmax: tuple[str, ...]
    graphs_scanned: int
    source: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "f_value": self.f_value,
            "argmax": list(self.argmax),
            "graphs_scanned": self.graphs_scanned,
            "source": self.source,
        }


def _iter_graph6_file(path):
    with open(path) as fh:
        for line in fh:
            rec = line.strip()
            if rec:
                yield parse_graph6(rec)


def _rho_of_record(rec: str) -> tuple[str, int]:
    return rec, rubbling_number(parse_graph6(rec))


def f_survey(
    n: int,
    d: int,
    *,
    graph6_path=None,
    budget: WorkBudget | None = None,
    log_path=None,
    jobs: int = 1,
) -> SurveyResult:
    """Max rubbling number over connected n-vertex diameter-d graphs.

    Uses the internal enumerator unless graph6_path names a complete external
    enumeration (records of other orders/diameters are filtered out).  A JSONL
    log makes long runs resumable: already-logged records are not recomputed.
    Parallel evaluation (jobs > 1) requires an unlimited budget and aggregates
    deterministically (max value, sorted argmax set).
    """
    if graph6_path is not None:
        stream = _iter_graph6_file(graph6_path)
        source = "external file"
    else:
        stream = enumerate_connected(n)
        source = "internal"

    done: dict[str, int] = {}
    if log_path is not None and os.path.exists(log_path):
        with open(log_path) as fh:
            for line in fh:
                if line.strip():
                    entry = json.loads(line)
                    done[entry["graph6"]] = entry["rho"]

    records = []
    for g in stream:
        if g.n != n or distances(g).diameter != d:
            continue
        records.append(write_graph6(g))

    log = open(log_path, "a") if log_path is not None else None
    try:
        results: dict[str, int] = {}
        todo = [rec for rec in records if rec not in done]
        for rec in records:
            if rec in done:
                results[rec] = done[rec]
        if jobs > 1 and (budget is None or budget.limit is None) and todo:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for rec, rho in pool.map(_rho_of_record, todo, chunksize=8):
                    results[rec] = rho
                    if log:
                        log.write(json.dumps({"graph6": rec, "rho": rho}) + "\n")
                        log.flush()
        else:
            for rec in todo:
                rho = rubbling_number(parse_graph6(rec), MoveMode.RUBBLING, budget)
                results[rec] = rho
                if log:
                    log.write(json.dumps({"graph6": rec, "rho": rho}) + "\n")
                    log.flush()
    finally:
        if log:
            log.close()

    if not results:
        raise OutOfRangeError(f"no connected graphs with n={n}, diameter {d} in the source")
    f_value = max(results.values())
    argmax = tuple(sorted(rec for rec, rho in results.items() if rho == f_value))
    return SurveyResult(n, d, f_value, argmax, len(records), source)
