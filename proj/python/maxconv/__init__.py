"""Max-convolutions of discrete probability measures.

Thin Python surface over the C++ core: the four max-convolutions, the free
max power, subordination, transforms, and the operator-model verifiers.
"""

from ._core import (
    DiscreteMeasure,
    atom_at_zero_monotone_projections,
    boolean_max,
    cauchy_transform,
    classical_max,
    discretize_named,
    empirical_from_samples,
    free_max,
    free_max_power,
    ks_distance,
    monotone_max,
    reciprocal_cauchy,
    run_all_suites,
    run_suite,
    sample,
    subordinate,
    suite_names,
    verify_projection_join_formula,
)

__version__ = "0.1.0"

__all__ = [
    "DiscreteMeasure",
    "atom_at_zero_monotone_projections",
    "boolean_max",
    "cauchy_transform",
    "classical_max",
    "discretize_named",
    "empirical_from_samples",
    "free_max",
    "free_max_power",
    "ks_distance",
    "monotone_max",
    "reciprocal_cauchy",
    "run_all_suites",
    "run_suite",
    "sample",
    "subordinate",
    "suite_names",
    "verify_projection_join_formula",
]
