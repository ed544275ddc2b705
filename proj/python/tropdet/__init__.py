"""Tropical determinant bounds on integer transportation polytopes."""

from ._core import (
    BoundReport,
    MembershipReport,
    ProblemParams,
    TropdetError,
    VerificationReport,
    XYSolution,
    analyze_bounds,
    col_sums,
    construct_lower,
    construct_lower_blocks,
    construct_lower_uniform,
    construct_upper,
    count_points,
    derive_params,
    dhs_x,
    format_matrix,
    lower_bound,
    lower_bound_corollaries,
    max_low_block_dims,
    parse_matrix,
    row_sums,
    solve_xy,
    sorting_cost,
    tdet,
    tdet_bruteforce,
    threshold_transversal_exists,
    tropdet,
    upper_bound,
    validate_membership,
    verify_bounds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
