"""Uniform random binary trees.

Linear-time generation of uniformly random binary tree shapes (alternating
fill, Fisher-Yates shuffle, first-minimum rotation), labeling from a
primitive set, plus the oracles used to validate uniformity, depth
statistics and runtime scaling.
"""

from randtree._core import (
    BenchRecord,
    CycleLemmaReport,
    DepthSummary,
    Error,
    ParkMiller,
    PrimitiveSet,
    Tree,
    UniformityResult,
    catalan_exact,
    chi_square_critical,
    chi_square_uniform,
    depth_from_lattice,
    depth_recursive_oracle,
    derive_trial_seed,
    enumerate_shapes,
    expected_height_internal,
    flajolet_depth_limit,
    is_valid_preorder,
    load_tree,
    loglog_slope,
    random_shape,
    random_tree,
    sample_depths,
    time_generation,
    verify_cycle_lemma,
    wellformed,
)

__version__ = "1.0.0"

__all__ = [
    "BenchRecord",
    "CycleLemmaReport",
    "DepthSummary",
    "Error",
    "ParkMiller",
    "PrimitiveSet",
    "Tree",
    "UniformityResult",
    "catalan_exact",
    "chi_square_critical",
    "chi_square_uniform",
    "depth_from_lattice",
    "depth_recursive_oracle",
    "derive_trial_seed",
    "enumerate_shapes",
    "expected_height_internal",
    "flajolet_depth_limit",
    "is_valid_preorder",
    "load_tree",
    "loglog_slope",
    "random_shape",
    "random_tree",
    "sample_depths",
    "time_generation",
    "verify_cycle_lemma",
    "wellformed",
]
