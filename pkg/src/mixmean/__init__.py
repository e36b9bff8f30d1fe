"""Exact certificates for conjugated families of rational probability
distributions and the mixed-mean inequalities they induce."""

from .constructions import (
    PochhammerValue,
    ProfileMatrix,
    combinations_family,
    combinations_transition,
    combinations_weights,
    cyclic_family,
    cyclic_profile_explicit,
    cyclic_weights,
    extract_cyclic_profile,
    kedlaya_family,
    kedlaya_transition,
    kedlaya_weights,
    lift_cyclic_profile,
    pochhammer,
    rotate_transition,
    verify_cyclic_profile,
)
from .distributions import (
    Certificate,
    DistSequence,
    Failure,
    ProbDist,
    TransitionMatrix,
    dist_from_weights,
    necessary_condition,
    uniform_on_support,
    verify_transition,
)
from .gridexpand import (
    ExpansionMatrix,
    GridPartition,
    expand_transition,
    proportional_partition,
    verify_expansion,
)
from .means import (
    MeanSpec,
    WeightFunction,
    evaluate_mean,
    evaluate_weighted,
    format_mean_spec,
    is_monotone,
    parse_mean_spec,
)
from .solver import (
    LinearSystem,
    ProfileSolve,
    SolveOutcome,
    TransitionSolve,
    cyclic_profile_system,
    solve_cyclic_profile,
    solve_feasibility,
    solve_transition,
    transition_system,
)
from .verify import (
    AggregateReport,
    IJPairVerdict,
    InequalityReport,
    SamplerConfig,
    check_mixed_inequality,
    is_ij_pair,
    random_suite,
    sample_inputs,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport",
    "Certificate",
    "DistSequence",
    "ExpansionMatrix",
    "Failure",
    "GridPartition",
    "IJPairVerdict",
    "InequalityReport",
    "LinearSystem",
    "MeanSpec",
    "PochhammerValue",
    "ProbDist",
    "ProfileMatrix",
    "ProfileSolve",
    "SamplerConfig",
    "SolveOutcome",
    "TransitionMatrix",
    "TransitionSolve",
    "WeightFunction",
    "check_mixed_inequality",
    "combinations_family",
    "combinations_transition",
    "combinations_weights",
    "cyclic_family",
    "cyclic_profile_explicit",
    "cyclic_profile_system",
    "cyclic_weights",
    "dist_from_weights",
    "evaluate_mean",
    "evaluate_weighted",
    "expand_transition",
    "extract_cyclic_profile",
    "format_mean_spec",
    "is_ij_pair",
    "is_monotone",
    "kedlaya_family",
    "kedlaya_transition",
    "kedlaya_weights",
    "lift_cyclic_profile",
    "necessary_condition",
    "parse_mean_spec",
    "pochhammer",
    "proportional_partition",
    "random_suite",
    "rotate_transition",
    "sample_inputs",
    "solve_cyclic_profile",
    "solve_feasibility",
    "solve_transition",
    "transition_system",
    "uniform_on_support",
    "verify_cyclic_profile",
    "verify_expansion",
    "verify_transition",
]
