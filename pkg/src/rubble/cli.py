"""Command-line front end.

Exit codes: 0 success, 1 negative domain answer (target unreachable, invalid
certificate), 2 usage or input error, 3 work budget exhausted.
"""

import argparse
import json
import sys

from . import certificates, families, numbers, survey
from .budget import WorkBudget, budget_from_env
from .engine import (
    Distribution,
    MoveMode,
    format_distribution,
    parse_distribution,
    reachable,
    reaches_all,
)
from .errors import BudgetExceededError, RubbleError
from .graphs import from_edge_json, to_edge_json, write_graph6


def _add_graph_source(parser, required=True):
    grp = parser.add_mutually_exclusive_group(required=required)
    grp.add_argument("--family", help="family spec, e.g. path:5, gn:9, grid:2")
    grp.add_argument("--graph6", help="one graph6 record")
    grp.add_argument("--edges-json", help="path to an edge-list JSON file")


def _add_common(parser):
    parser.add_argument(
        "--mode",
        choices=["rubbling", "pebbling"],
        default="rubbling",
        help="allow strict rubbling moves (default) or pebbling moves only",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="cap on distribution evaluations (overrides RUBBLE_BUDGET)",
    )


def _graph_from_args(args):
    if getattr(args, "family", None):
        return families.FamilySpec.parse(args.family).build()
    if getattr(args, "graph6", None):
        from .graphs import parse_graph6

        return parse_graph6(args.graph6)
    with open(args.edges_json) as fh:
        return from_edge_json(json.load(fh))


def _mode_from_args(args) -> MoveMode:
    return MoveMode.RUBBLING if args.mode == "rubbling" else MoveMode.PEBBLING_ONLY


def _budget_from_args(args) -> WorkBudget:
    if getattr(args, "budget", None) is not None:
        return WorkBudget(limit=args.budget)
    return budget_from_env()


def _graph_doc(g, args) -> dict:
    doc = {"n": g.n}
    if g.n <= 62:
        doc["graph6"] = write_graph6(g)
    if getattr(args, "family", None):
        doc["family"] = args.family
    return doc


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True))


def _sparse(g, p: Distribution) -> dict:
    return {g.label_of(v): c for v, c in p.to_sparse().items()}


def _cmd_family(args) -> int:
    g = _graph_from_args(args)
    if args.json:
        _emit(to_edge_json(g))
    else:
        print(f"n = {g.n}")
        print(f"edges = {g.edge_count()}")
        if g.n <= 62:
            print(f"graph6: {write_graph6(g)}")
        if g.labels:
            print("labels: " + " ".join(g.labels))
    return 0


def _cmd_reach(args) -> int:
    g = _graph_from_args(args)
    p = parse_distribution(g, args.dist)
    x = g.vertex_by_label(args.target)
    ok, cert = reachable(g, p, x, _mode_from_args(args), budget=_budget_from_args(args))
    if ok and args.certificate:
        certificates.save_certificate(args.certificate, g, cert)
    if args.json:
        doc = {
            "graph": _graph_doc(g, args),
            "mode": args.mode,
            "target": g.label_of(x),
            "reachable": ok,
        }
        if ok:
            doc["certificate"] = certificates.certificate_to_json(cert)
        _emit(doc)
    else:
        print("reachable" if ok else "unreachable")
    return 0 if ok else 1


def _cmd_rho(args) -> int:
    g = _graph_from_args(args)
    res = numbers.rho_detail(g, _mode_from_args(args), _budget_from_args(args))
    if args.json:
        doc = {"graph": _graph_doc(g, args), "mode": args.mode, "rho": res.value}
        if res.witness_unsolvable is not None:
            doc["witness_unsolvable"] = {
                "distribution": _sparse(g, res.witness_unsolvable),
                "target": g.label_of(res.witness_target),
            }
        _emit(doc)
    else:
        print(res.value)
    return 0


def _cmd_rho_opt(args) -> int:
    g = _graph_from_args(args)
    value, wit = numbers.optimal_rubbling_number(
        g, _mode_from_args(args), _budget_from_args(args)
    )
    if args.json:
        _emit(
            {
                "graph": _graph_doc(g, args),
                "mode": args.mode,
                "rho_opt": value,
                "witness": _sparse(g, wit),
            }
        )
    else:
        print(value)
        print("witness: " + format_distribution(g, wit))
    return 0


def _cmd_bounds(args) -> int:
    g = _graph_from_args(args)
    exact_rho = exact_opt = None
    if args.exact:
        mode = _mode_from_args(args)
        budget = _budget_from_args(args)
        exact_rho = numbers.rubbling_number(g, mode, budget)
        exact_opt = numbers.optimal_rubbling_number(g, mode, budget)[0]
    report = numbers.bound_report(g, exact_rho, exact_opt)
    doc = {"graph": _graph_doc(g, args), **report.to_json()}
    if args.json:
        _emit(doc)
    else:
        for key, val in sorted(doc.items()):
            if key != "graph":
                print(f"{key} = {val}")
    return 0


def _cmd_witness(args) -> int:
    spec = families.FamilySpec.parse(args.family)
    if spec.kind != "gn":
        raise RubbleError("witness is defined for the gn family")
    g, p, x = families.gn_witness(spec.parameter)
    ok, _ = reachable(g, p, x, MoveMode.RUBBLING, budget=_budget_from_args(args))
    if args.json:
        _emit(
            {
                "graph": _graph_doc(g, args),
                "distribution": _sparse(g, p),
                "size": p.size,
                "target": g.label_of(x),
                "reachable": ok,
            }
        )
    else:
        print("distribution: " + format_distribution(g, p))
        print(f"target: {g.label_of(x)}")
        print("reachable" if ok else "unreachable")
    return 0 if not ok else 1


def _cmd_verify(args) -> int:
    g, cert = certificates.load_certificate(args.certificate)
    ok = certificates.verify(g, cert)
    if args.json:
        _emit({"valid": ok, "moves": len(cert.moves)})
    else:
        print("valid" if ok else "invalid")
    return 0 if ok else 1


def _cmd_survey(args) -> int:
    budget = _budget_from_args(args)
    result = survey.f_survey(
        args.n,
        args.d,
        graph6_path=args.from_file,
        budget=budget,
        log_path=args.log,
        jobs=args.jobs,
    )
    if args.json:
        _emit(result.to_json())
    else:
        print(f"f({result.n},{result.d}) = {result.f_value}")
        print(f"graphs scanned: {result.graphs_scanned} ({result.source})")
        print("argmax: " + " ".join(result.argmax))
    return 0


def _cmd_tree_dist(args) -> int:
    g = _graph_from_args(args)
    dist = numbers.tree_optimal_distribution(g, _budget_from_args(args))
    if args.json:
        _emit(
            {
                "graph": _graph_doc(g, args),
                "distribution": _sparse(g, dist),
                "size": dist.size,
            }
        )
    else:
        print(format_distribution(g, dist))
    return 0


def _cmd_quotient(args) -> int:
    g = _graph_from_args(args)
    p = parse_distribution(g, args.dist)
    v0 = g.vertex_by_label(args.root)
    pg, q = numbers.quotient_to_path(g, v0, p)
    if args.json:
        _emit(
            {
                "graph": _graph_doc(g, args),
                "root": g.label_of(v0),
                "path_vertices": pg.n,
                "quotient": {str(v): c for v, c in q.to_sparse().items()},
            }
        )
    else:
        print(f"path on {pg.n} vertices")
        print(format_distribution(pg, q))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rubble",
        description="Exact graph rubbling/pebbling solver and verification toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="construct a named family graph")
    _add_graph_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("reach", help="decide reachability of a target vertex")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--dist", required=True, help='distribution, e.g. "(4,4):3,0:1"')
    p.add_argument("--target", required=True, help="target vertex (label or index)")
    p.add_argument("--certificate", help="write a certificate file when reachable")
    p.set_defaults(func=_cmd_reach)

    p = sub.add_parser("rho", help="exact rubbling number")
    _add_graph_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_rho)

    p = sub.add_parser("rho-opt", help="exact optimal rubbling number")
    _add_graph_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_rho_opt)

    p = sub.add_parser("bounds", help="evaluate every closed-form bound")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--exact", action="store_true", help="also compute exact values")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("witness", help="adversarial distribution for the gn family")
    _add_graph_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="verify a certificate file")
    _add_common(p)
    p.add_argument("--certificate", required=True, help="certificate file to check")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("survey", help="max rubbling number over an enumeration")
    _add_common(p)
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--d", type=int, required=True, help="diameter")
    p.add_argument("--from-file", help="external graph6 enumeration (one record/line)")
    p.add_argument("--log", help="JSONL per-graph log; reruns resume from it")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("tree-dist", help="optimal-size solvable distribution on a tree")
    _add_graph_source(p)
    _add_common(p)
    p.set_defaults(func=_cmd_tree_dist)

    p = sub.add_parser("quotient", help="collapse BFS levels onto a path")
    _add_graph_source(p)
    _add_common(p)
    p.add_argument("--root", required=True, help="BFS root vertex (label or index)")
    p.add_argument("--dist", required=True, help="distribution to collapse")
    p.set_defaults(func=_cmd_quotient)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RubbleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
