"""Choosing the covariance threshold v."""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from diffee.core.errors import InvalidInputError, SelectionFailedError
from diffee.linalg import check_same_dim, default_tolerance, exceeds_tolerance, min_eigenvalue, tv_threshold
from diffee.models.matrices import SymMatrix
from diffee.models.params import TvPolicy

logger = logging.getLogger(__name__)

V_GRID_STEP = 0.001
V_GRID_SIZE = 1000


def default_v_grid(step: float = V_GRID_STEP, size: int = V_GRID_SIZE) -> List[float]:
    """{step * i | i = 1..size}"""
    return [step * i for i in range(1, size + 1)]


def _qualifies(thresholded: SymMatrix, min_eig_tol: Optional[float]) -> bool:
    tol = default_tolerance(thresholded) if min_eig_tol is None else min_eig_tol
    # Cholesky screens; the eigenvalue confirms at the boundary
    return exceeds_tolerance(thresholded, tol) and min_eigenvalue(thresholded) > tol


def select_v(
    sigma_c: SymMatrix,
    sigma_d: SymMatrix,
    grid: Optional[Sequence[float]] = None,
    policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY,
    min_eig_tol: Optional[float] = None,
) -> float:
    """Smallest grid value making both T_v(Σ̂_c) and T_v(Σ̂_d) invertible"""
    check_same_dim(sigma_c.dim, sigma_d.dim, "covariances")
    values = list(default_v_grid() if grid is None else grid)
    if not values:
        raise InvalidInputError("v grid must be nonempty")
    if any(b <= a for a, b in zip(values, values[1:])) or values[0] < 0:
        raise InvalidInputError("v grid must be non-negative and strictly ascending")

    for v in values:
        if _qualifies(tv_threshold(sigma_c, v, policy), min_eig_tol) and _qualifies(
            tv_threshold(sigma_d, v, policy), min_eig_tol
        ):
            logger.info("selected v=%g", v)
            return v
        logger.debug("v=%g leaves a thresholded covariance singular", v)

    best_eig, best_v = -math.inf, values[0]
    for v in values:
        lowest = min(
            min_eigenvalue(tv_threshold(sigma_c, v, policy)),
            min_eigenvalue(tv_threshold(sigma_d, v, policy)),
        )
        if lowest > best_eig:
            best_eig, best_v = lowest, v
    raise SelectionFailedError(best_eig, best_v, len(values))


def theoretical_v(p: int, n_c: int, n_d: int, a: float = 1.0) -> float:
    """Rate-form threshold a * sqrt(ln p / min(n_c, n_d))"""
    if p < 2 or min(n_c, n_d) < 1:
        raise InvalidInputError(f"need p >= 2 and n_c, n_d >= 1, got p={p}, n_c={n_c}, n_d={n_d}")
    if a < 0:
        raise InvalidInputError(f"scale a must be >= 0, got {a}")
    return float(a * np.sqrt(np.log(p) / min(n_c, n_d)))
