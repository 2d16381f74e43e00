"""Dense symmetric-matrix primitives.

Covariance estimation, the two thresholding operators and a guarded
symmetric inverse. Every function is pure and returns a new SymMatrix.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy import linalg

from diffee.core.errors import DimensionMismatchError, InvalidInputError, NotInvertibleError
from diffee.models.matrices import MatrixRole, SampleMatrix, SymMatrix
from diffee.models.params import TvPolicy

logger = logging.getLogger(__name__)

# Inversion tolerance is this factor times the largest diagonal entry
MIN_EIG_RTOL = 1e-8


def sample_covariance(X: SampleMatrix) -> SymMatrix:
    """Mean-centred covariance with divisor n"""
    data = X.data
    centered = data - data.mean(axis=0)
    cov = centered.T @ centered / data.shape[0]
    return SymMatrix.symmetrized(cov, MatrixRole.COVARIANCE)


def _shrink(values: np.ndarray, lam: float) -> np.ndarray:
    # sign(a) * max(|a| - λ, 0)
    return values - np.clip(values, -lam, lam)


def soft_threshold(A: SymMatrix, lam: float) -> SymMatrix:
    """Entry-wise S_λ, diagonal included"""
    if not lam >= 0:
        raise InvalidInputError(f"soft-threshold level must be >= 0, got {lam}")
    return SymMatrix(entries=_shrink(A.entries, lam), role=A.role)


def soft_threshold_off_diagonal(A: SymMatrix, lam: float) -> SymMatrix:
    """S_λ on off-diagonal entries; the diagonal passes through"""
    if not lam >= 0:
        raise InvalidInputError(f"soft-threshold level must be >= 0, got {lam}")
    shrunk = _shrink(A.entries, lam)
    np.fill_diagonal(shrunk, np.diag(A.entries))
    return SymMatrix(entries=shrunk, role=A.role)


def tv_threshold(
    A: SymMatrix,
    v: float,
    policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY,
) -> SymMatrix:
    """The covariance threshold T_v"""
    if not v >= 0:
        raise InvalidInputError(f"T_v threshold must be >= 0, got {v}")
    if TvPolicy(policy) is TvPolicy.ALL_ENTRIES:
        return soft_threshold(A, v)
    return soft_threshold_off_diagonal(A, v)


def min_eigenvalue(A: SymMatrix | np.ndarray) -> float:
    """Smallest eigenvalue of a symmetric matrix"""
    entries = A.entries if isinstance(A, SymMatrix) else np.asarray(A, dtype=np.float64)
    if not np.all(np.isfinite(entries)):
        raise InvalidInputError("cannot take eigenvalues of a matrix with non-finite entries")
    return float(linalg.eigvalsh(entries, subset_by_index=[0, 0], check_finite=False)[0])


def default_tolerance(A: SymMatrix) -> float:
    """Scale-aware singularity guard: MIN_EIG_RTOL times the largest diagonal entry"""
    scale = float(np.max(np.abs(np.diag(A.entries))))
    return MIN_EIG_RTOL * scale if scale > 0 else MIN_EIG_RTOL


def exceeds_tolerance(A: SymMatrix, min_eig_tol: Optional[float] = None) -> bool:
    """Cheap check that the smallest eigenvalue exceeds the tolerance.

    A Cholesky factorisation of A - tol*I succeeds exactly when A - tol*I is
    positive definite, which costs a third of an eigensolve.
    """
    tol = default_tolerance(A) if min_eig_tol is None else min_eig_tol
    shifted = A.entries - tol * np.eye(A.dim)
    try:
        linalg.cholesky(shifted, lower=True, check_finite=False)
    except linalg.LinAlgError:
        return False
    return True


def invert_sym_with_min_eig(
    A: SymMatrix,
    min_eig_tol: Optional[float] = None,
    role: MatrixRole = MatrixRole.PRECISION,
) -> Tuple[SymMatrix, float]:
    """invert_sym that also returns the smallest eigenvalue it checked"""
    tol = default_tolerance(A) if min_eig_tol is None else min_eig_tol
    if not tol > 0:
        raise InvalidInputError(f"inversion tolerance must be > 0, got {tol}")
    lowest = min_eigenvalue(A)
    if lowest <= tol:
        raise NotInvertibleError(lowest, tol)
    factor = linalg.cho_factor(A.entries, lower=True, check_finite=False)
    inverse = linalg.cho_solve(factor, np.eye(A.dim), check_finite=False)
    return SymMatrix.symmetrized(inverse, role), lowest


def invert_sym(
    A: SymMatrix,
    min_eig_tol: Optional[float] = None,
    role: MatrixRole = MatrixRole.PRECISION,
) -> SymMatrix:
    """Inverse of a symmetric positive definite matrix, re-symmetrized.

    Raises NotInvertibleError carrying the offending eigenvalue when the
    smallest eigenvalue does not exceed min_eig_tol.
    """
    inverse, _ = invert_sym_with_min_eig(A, min_eig_tol, role)
    return inverse


def check_same_dim(a: int, b: int, what: str = "operands") -> None:
    """Raise DimensionMismatchError unless a == b"""
    if a != b:
        raise DimensionMismatchError(f"{what} disagree on dimension: {a} vs {b}")
