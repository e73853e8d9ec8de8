__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__application_name__ = "Partial Ranking"

__major_version__ = "0"
__minor_version__ = "1"
__change_version__ = "0"
__version__ = f"{__major_version__}.{__minor_version__}.{__change_version__}"

# isort: off
from .exceptions import (
    PartialRankingError,
    DataError,
    EnumerationBudgetError,
    ConvergenceError,
    InconsistentSystemError,
    OptimizerWarning,
    DataWarning,
)
from .core import (
    MAXIMUM_ENUMERATION_TEAMS,
    TournamentGraph,
    MeritVector,
    Ranking,
    OutcomeData,
    ProbabilityAssignment,
    sign,
    ranks_from_merits,
    is_valid_ranking,
    ordered_bell_number,
    enumerate_rankings,
    is_connected,
    diameter_at_most_two,
    oriented_prob,
    contract_ties,
    probabilities_from_function,
)
from .ident import (
    LinkFunction,
    LINK_BTL,
    LINK_PROBIT,
    LINK_FUNCTIONS,
    probabilities_from_merits,
    ConstraintSystem,
    IdentifiedSet,
    build_constraint_system,
    check_membership,
    check_membership_matrix,
    identified_set,
    project_rank,
    solve_linear_parametric,
    semiparametric_witness,
    check_membership_semiparametric,
)
from .projection import (
    ProjectionResult,
    project_onto_polyhedron,
    polyhedron_vertices,
    MAXIMUM_ISOTONIC_ELEMENTS,
    minmax_isotonic,
)
from .inference import (
    METHODS,
    DEFAULT_REPLICATIONS_ASYMPTOTIC,
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_STATISTIC_TOLERANCE,
    FiniteSampleOptions,
    RestrictedFit,
    TestOutcome,
    unrestricted_mle,
    restricted_mle,
    test_statistic,
    strict_threshold,
    enumerate_outcomes,
    region_probability,
    region_probability_gradient,
    FiniteSamplePValue,
    FiniteSampleNull,
    AsymptoticNull,
    pvalue_finite_sample,
    pvalue_asymptotic,
    RankingTester,
    test_ranking,
    confidence_set,
)
from .montecarlo import (
    DEFAULT_REPLICATIONS_EXPERIMENT,
    ExperimentConfig,
    RankFrequencyTable,
    simulate_tournament,
    run_experiment,
    rejection_rate,
)
from .transitions import (
    DEFAULT_MIN_GAMES,
    DEFAULT_DAMPING,
    TransitionTable,
    read_transitions_csv,
    transitions_to_outcomes,
    pagerank_scores,
    pagerank,
)
from .io import (
    read_edges_csv,
    write_edges_csv,
    read_probabilities_csv,
    write_probabilities_csv,
    write_frequency_csv,
    read_report,
    parse_report,
    write_report,
    read_experiment_config,
)
from . import report

# isort: on

__all__ = [
    "PartialRankingError",
    "DataError",
    "EnumerationBudgetError",
    "ConvergenceError",
    "InconsistentSystemError",
    "OptimizerWarning",
    "DataWarning",
]
__all__ += [
    "MAXIMUM_ENUMERATION_TEAMS",
    "TournamentGraph",
    "MeritVector",
    "Ranking",
    "OutcomeData",
    "ProbabilityAssignment",
    "sign",
    "ranks_from_merits",
    "is_valid_ranking",
    "ordered_bell_number",
    "enumerate_rankings",
    "is_connected",
    "diameter_at_most_two",
    "oriented_prob",
    "contract_ties",
    "probabilities_from_function",
]
__all__ += [
    "LinkFunction",
    "LINK_BTL",
    "LINK_PROBIT",
    "LINK_FUNCTIONS",
    "probabilities_from_merits",
    "ConstraintSystem",
    "IdentifiedSet",
    "build_constraint_system",
    "check_membership",
    "check_membership_matrix",
    "identified_set",
    "project_rank",
    "solve_linear_parametric",
    "semiparametric_witness",
    "check_membership_semiparametric",
]
__all__ += [
    "ProjectionResult",
    "project_onto_polyhedron",
    "polyhedron_vertices",
    "MAXIMUM_ISOTONIC_ELEMENTS",
    "minmax_isotonic",
]
__all__ += [
    "METHODS",
    "DEFAULT_REPLICATIONS_ASYMPTOTIC",
    "DEFAULT_ENUMERATION_BUDGET",
    "DEFAULT_STATISTIC_TOLERANCE",
    "FiniteSampleOptions",
    "RestrictedFit",
    "TestOutcome",
    "unrestricted_mle",
    "restricted_mle",
    "test_statistic",
    "strict_threshold",
    "enumerate_outcomes",
    "region_probability",
    "region_probability_gradient",
    "FiniteSamplePValue",
    "FiniteSampleNull",
    "AsymptoticNull",
    "pvalue_finite_sample",
    "pvalue_asymptotic",
    "RankingTester",
    "test_ranking",
    "confidence_set",
]
__all__ += [
    "DEFAULT_REPLICATIONS_EXPERIMENT",
    "ExperimentConfig",
    "RankFrequencyTable",
    "simulate_tournament",
    "run_experiment",
    "rejection_rate",
]
__all__ += [
    "DEFAULT_MIN_GAMES",
    "DEFAULT_DAMPING",
    "TransitionTable",
    "read_transitions_csv",
    "transitions_to_outcomes",
    "pagerank_scores",
    "pagerank",
]
__all__ += [
    "read_edges_csv",
    "write_edges_csv",
    "read_probabilities_csv",
    "write_probabilities_csv",
    "write_frequency_csv",
    "read_report",
    "parse_report",
    "write_report",
    "read_experiment_config",
    "report",
]
