"""k-power domination on WK-recursive mesh and WK-pyramid networks.

Generators for the two graph families, a simultaneous-round monitoring
engine, the closed-form minimum-set constructions with verification, and
an exhaustive oracle that certifies the closed formulas at desk scale.
"""

from .constructions import (
    ConstructionError,
    GammaValue,
    HamCycle,
    Regime,
    RegimeError,
    RegimeTag,
    construct_general,
    construct_kc1,
    construct_kpds,
    construct_level2,
    construct_trivial,
    gamma_formula,
    ham_cycle_wk,
    regime_of,
)
from .exact import (
    BudgetExceededError,
    ExactResult,
    SearchBudget,
    exact_result_to_json,
    level1_intersection_check,
    min_kpds,
    propagation_radius,
    verify_lower_bound,
)
from .propagation import (
    NEVER,
    MonitorTrace,
    PdsCertificate,
    certificate_to_json,
    closed_neighborhood,
    is_kpds,
    make_certificate,
    propagate_fixpoint,
    propagate_round,
    radius_of_set,
    trace_to_json,
)
from .report import ReportRow, ReproReport, run_check_paper
from .topology import (
    APEX,
    DEFAULT_MAX_VERTICES,
    WK,
    WKP,
    Address,
    AddressParseError,
    EdgeRef,
    ParameterDomainError,
    PyramidGraph,
    build_wk,
    build_wkp,
    clique_members,
    crossing_edge,
    export,
    extreme_vertices,
    graph_from_json,
    gw_subgraph,
    parse_address,
)

__version__ = "0.1.0"

__all__ = [
    "APEX",
    "Address",
    "AddressParseError",
    "BudgetExceededError",
    "ConstructionError",
    "DEFAULT_MAX_VERTICES",
    "EdgeRef",
    "ExactResult",
    "GammaValue",
    "HamCycle",
    "MonitorTrace",
    "NEVER",
    "ParameterDomainError",
    "PdsCertificate",
    "PyramidGraph",
    "Regime",
    "RegimeError",
    "RegimeTag",
    "ReportRow",
    "ReproReport",
    "SearchBudget",
    "WK",
    "WKP",
    "build_wk",
    "build_wkp",
    "certificate_to_json",
    "clique_members",
    "closed_neighborhood",
    "construct_general",
    "construct_kc1",
    "construct_kpds",
    "construct_level2",
    "construct_trivial",
    "crossing_edge",
    "exact_result_to_json",
    "export",
    "extreme_vertices",
    "gamma_formula",
    "graph_from_json",
    "gw_subgraph",
    "ham_cycle_wk",
    "is_kpds",
    "level1_intersection_check",
    "make_certificate",
    "min_kpds",
    "parse_address",
    "propagate_fixpoint",
    "propagate_round",
    "propagation_radius",
    "radius_of_set",
    "regime_of",
    "run_check_paper",
    "trace_to_json",
    "verify_lower_bound",
]
