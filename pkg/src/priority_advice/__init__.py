"""Adaptive priority algorithms with advice: an optimal vertex-cover algorithm
for max-degree-3 graphs, its advice-enumeration exact solver, and lower-bound
machinery (guessing reductions, ratio formulas, a thorny-path adversary)."""

from .enumeration import EnumerationReport, exact_mvc_by_enumeration
from .framework import (
    AdviceTape,
    Decision,
    InputItem,
    ModelTag,
    TapeExhausted,
    Trace,
    parse_tiebreak,
    read_advice,
    run_priority_algorithm,
    select_next_item,
)
from .graphs import Graph, gen_gadget_graph, gen_online_lb, gen_random_max3, gen_thorny, parse_graph
from .oracle import CoverConstraint, min_vertex_cover, oracle_advice_bit
from .vc_solver import audit_components, check_advice_budget, replay_with_advice, solve_with_oracle

__version__ = "0.1.0"
