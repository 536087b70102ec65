"""Exact evolutionarily stable strategies, clique reduction games and their parameter regions."""

from .clique import CliqueReport, has_clique, max_clique, modified_adjacency_value, motzkin_straus_value, scaled_simplex_value
from .core import ConsistencyError, Graph, MixedStrategy, ParseError, SymmetricGame, expected_payoff, parse_graph, parse_rational
from .ess import (
    BestResponseFace,
    EssVerdict,
    InvasionOutcome,
    best_response_face,
    check_ess,
    ess_enumerate,
    has_ess,
    invasion_threshold,
    symmetric_ne_enumerate,
)
from .reduction import (
    EL1,
    IntervalReport,
    ReductionParams,
    RobustRectangle,
    build_game,
    el1_intervals,
    elx_intervals,
    in_validity_region,
    robust_rectangle,
)
from .robustness import FuzzReport, PerturbationSample, fuzz_reduction, random_game_experiment
from .search import SearchTrace, binary_clique_search, dec_ess
from .simplex_qp import SimplexQpProblem, SimplexQpSolution, grid_check, maximize

__all__ = [
    "EL1",
    "BestResponseFace",
    "CliqueReport",
    "ConsistencyError",
    "EssVerdict",
    "FuzzReport",
    "Graph",
    "IntervalReport",
    "InvasionOutcome",
    "MixedStrategy",
    "ParseError",
    "PerturbationSample",
    "ReductionParams",
    "RobustRectangle",
    "SearchTrace",
    "SimplexQpProblem",
    "SimplexQpSolution",
    "SymmetricGame",
    "best_response_face",
    "binary_clique_search",
    "build_game",
    "check_ess",
    "dec_ess",
    "el1_intervals",
    "elx_intervals",
    "ess_enumerate",
    "expected_payoff",
    "fuzz_reduction",
    "grid_check",
    "has_clique",
    "has_ess",
    "in_validity_region",
    "invasion_threshold",
    "max_clique",
    "maximize",
    "modified_adjacency_value",
    "motzkin_straus_value",
    "parse_graph",
    "parse_rational",
    "random_game_experiment",
    "robust_rectangle",
    "scaled_simplex_value",
    "symmetric_ne_enumerate",
]
