"""Exact solver and verification toolkit for graph rubbling and pebbling."""

from .budget import WorkBudget, budget_from_env
from .certificates import (
    Certificate,
    TransitionDigraph,
    is_acyclic,
    is_balanced,
    net_effect,
    order_acyclic,
    transition_digraph,
    verify,
)
from .engine import (
    Distribution,
    Move,
    MoveKind,
    MoveMode,
    ReachabilityLevels,
    apply_move,
    format_distribution,
    legal_moves,
    parse_distribution,
    reachable,
    reaches_all,
    weight,
)
from .families import FamilySpec, g_n, gn_witness, grid_power, h_graph, h_prime, path
from .families import complete  # noqa: F401
from .graphs import (
    DistanceTable,
    Graph,
    canonical_form,
    distances,
    from_edge_json,
    from_edge_list,
    parse_graph6,
    to_edge_json,
    write_graph6,
)
from .numbers import (
    BoundReport,
    bound_report,
    optimal_rubbling_number,
    quotient_to_path,
    rubbling_number,
    tree_optimal_distribution,
)
from .survey import SurveyResult, enumerate_connected, f_survey

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
