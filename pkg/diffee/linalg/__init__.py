from diffee.linalg.operators import (
    MIN_EIG_RTOL,
    check_same_dim,
    default_tolerance,
    exceeds_tolerance,
    invert_sym,
    invert_sym_with_min_eig,
    min_eigenvalue,
    sample_covariance,
    soft_threshold,
    soft_threshold_off_diagonal,
    tv_threshold,
)

__all__ = [
    "MIN_EIG_RTOL",
    "check_same_dim",
    "default_tolerance",
    "exceeds_tolerance",
    "invert_sym",
    "invert_sym_with_min_eig",
    "min_eigenvalue",
    "sample_covariance",
    "soft_threshold",
    "soft_threshold_off_diagonal",
    "tv_threshold",
]
