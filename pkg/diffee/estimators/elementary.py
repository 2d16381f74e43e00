"""Backward mappings and the single-graph elementary estimator."""

import logging

from diffee.core.errors import NotInvertibleError
from diffee.core.timing import timed
from diffee.linalg import (
    check_same_dim,
    invert_sym,
    invert_sym_with_min_eig,
    sample_covariance,
    soft_threshold_off_diagonal,
    tv_threshold,
)
from diffee.models.estimate import ProxyMap
from diffee.models.matrices import Condition, MatrixRole, SampleMatrix, SymMatrix
from diffee.models.params import TvPolicy

logger = logging.getLogger(__name__)


def _thresholded_inverse(sigma: SymMatrix, v: float, policy: TvPolicy, condition: Condition):
    try:
        return invert_sym_with_min_eig(tv_threshold(sigma, v, policy))
    except NotInvertibleError as exc:
        raise exc.for_condition(condition.value) from exc


def proxy_backward_map(
    sigma_c: SymMatrix,
    sigma_d: SymMatrix,
    v: float,
    policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY,
) -> ProxyMap:
    """[T_v(Σ̂_d)]⁻¹ − [T_v(Σ̂_c)]⁻¹"""
    check_same_dim(sigma_c.dim, sigma_d.dim, "covariances")

    def build():
        inv_c, eig_c = _thresholded_inverse(sigma_c, v, policy, Condition.CONTROL)
        inv_d, eig_d = _thresholded_inverse(sigma_d, v, policy, Condition.CASE)
        diff = SymMatrix(entries=inv_d.entries - inv_c.entries, role=MatrixRole.DIFFERENTIAL)
        return diff, (eig_c, eig_d)

    (diff, eigs), seconds = timed(build)
    logger.debug("proxy map built at v=%g, min eigenvalues %.4g / %.4g", v, *eigs)
    return ProxyMap(map=diff, v_used=v, min_eigs=eigs, seconds=seconds)


def exact_backward_map(sigma_c: SymMatrix, sigma_d: SymMatrix) -> SymMatrix:
    """Σ̂_d⁻¹ − Σ̂_c⁻¹; only defined in the low-dimensional regime"""
    check_same_dim(sigma_c.dim, sigma_d.dim, "covariances")
    try:
        inv_c = invert_sym(sigma_c)
    except NotInvertibleError as exc:
        raise exc.for_condition(Condition.CONTROL.value) from exc
    try:
        inv_d = invert_sym(sigma_d)
    except NotInvertibleError as exc:
        raise exc.for_condition(Condition.CASE.value) from exc
    return SymMatrix(entries=inv_d.entries - inv_c.entries, role=MatrixRole.DIFFERENTIAL)


def thresholded_precision(
    X: SampleMatrix,
    v: float,
    policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY,
) -> SymMatrix:
    """[T_v(Σ̂)]⁻¹ for one sample block"""
    inverse, _ = _thresholded_inverse(sample_covariance(X), v, policy, X.condition)
    return inverse


def ee_sggm(
    X: SampleMatrix,
    v: float,
    lam: float,
    policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY,
) -> SymMatrix:
    """Elementary estimator of one sparse precision matrix.

    Soft-thresholds the off-diagonal of [T_v(Σ̂)]⁻¹; the diagonal is kept.
    """
    return soft_threshold_off_diagonal(thresholded_precision(X, v, policy), lam)
