"""Join-tree evolution of sorting permutations.

Thin Python surface over the C++ core: tree construction, the expressed
permutation, the five sortedness measures, the mutation operator, (1+1)
runs, and the exact-probability oracle.
"""

from fractions import Fraction

from ._gpsort import (
    Improvement,
    MutationInstance,
    RandomStream,
    RunRecord,
    Tree,
    brute_force_exc,
    comb_from_leaf_list,
    evaluate,
    express,
    fit_loglog,
    hvl_mutate,
    is_optimal,
    make_leaf,
    misplaced_front_tree,
    misplaced_interior_tree,
    missing_first_tree,
    missing_interior_tree,
    missing_last_tree,
    neighborhood_size,
    optimal_value,
    random_tree,
    run,
    sample_k,
    substitution_blind_tree,
    trial_seed,
    verify_fix_kinds,
    worst_case_w1,
    worst_case_w2,
)
from ._gpsort import exact_improvement_probability as _exact_improvement_probability
from ._gpsort import exact_success_probability as _exact_success_probability

MEASURES = ("inv", "ham", "run", "las", "exc")
VARIANTS = ("single", "multi")
INIT_MODES = ("grow", "perm", "w1", "w2")


def exact_success_probability(tree, n):
    """Exact probability that one sub-operation reaches the optimum."""
    return Fraction(*_exact_success_probability(tree, n))


def exact_improvement_probability(tree, n, measure):
    """Exact probability that one sub-operation strictly improves fitness."""
    return Fraction(*_exact_improvement_probability(tree, n, measure))


__all__ = [
    "Improvement",
    "INIT_MODES",
    "MEASURES",
    "MutationInstance",
    "RandomStream",
    "RunRecord",
    "Tree",
    "VARIANTS",
    "brute_force_exc",
    "comb_from_leaf_list",
    "evaluate",
    "exact_improvement_probability",
    "exact_success_probability",
    "express",
    "fit_loglog",
    "hvl_mutate",
    "is_optimal",
    "make_leaf",
    "misplaced_front_tree",
    "misplaced_interior_tree",
    "missing_first_tree",
    "missing_interior_tree",
    "missing_last_tree",
    "neighborhood_size",
    "optimal_value",
    "random_tree",
    "run",
    "sample_k",
    "substitution_blind_tree",
    "trial_seed",
    "verify_fix_kinds",
    "worst_case_w1",
    "worst_case_w2",
]
