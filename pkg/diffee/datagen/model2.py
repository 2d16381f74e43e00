"""Random graph pairs sharing a common component."""

import logging

import numpy as np

from diffee.core.errors import InvalidInputError
from diffee.datagen.rng import Stream, child_rng
from diffee.linalg import min_eigenvalue
from diffee.models.matrices import MatrixRole, SymMatrix
from diffee.models.truth import GraphModel, GroundTruth

logger = logging.getLogger(__name__)

EDGE_VALUE = 0.5
EDGE_PROB = 0.1
# Floor on the smallest eigenvalue of each precision matrix, so ‖Ω⁻¹‖₂ <= 1
DIAGONAL_MARGIN = 1.0
MIN_P = 10


def symmetric_bernoulli(p: int, prob: float, rng: np.random.Generator, value: float = EDGE_VALUE) -> np.ndarray:
    """Independent upper-triangle draws mirrored below; zero diagonal"""
    upper = np.triu(rng.random((p, p)) < prob, k=1)
    draws = np.where(upper, value, 0.0)
    return draws + draws.T


def diagonal_shift(matrix: np.ndarray) -> float:
    """δ = max(0, −λ_min) + DIAGONAL_MARGIN.

    Any positive margin gives a positive definite Ω, but a small one leaves
    Ω with a condition number near p. The covariance is then dominated by
    the weakest precision direction and its thresholded inverse carries
    entries far above the λ grid.
    """
    return max(0.0, -min_eigenvalue(matrix)) + DIAGONAL_MARGIN


def gen_model2(p: int, s: float, seed: int) -> GroundTruth:
    """Ω_c = B_c + B_S + δ_c I and Ω_d = B_d + B_S + δ_d I"""
    if p < MIN_P:
        raise InvalidInputError(f"model 2 requires p >= {MIN_P}, got p={p}")
    if not 0 <= s <= 1:
        raise InvalidInputError(f"model 2 requires s in [0, 1], got s={s}")

    b_c = symmetric_bernoulli(p, EDGE_PROB, child_rng(seed, Stream.B_C))
    b_d = symmetric_bernoulli(p, EDGE_PROB, child_rng(seed, Stream.B_D))
    b_shared = symmetric_bernoulli(p, EDGE_PROB * s, child_rng(seed, Stream.B_SHARED))

    base_c = b_c + b_shared
    base_d = b_d + b_shared
    delta_c = diagonal_shift(base_c)
    delta_d = diagonal_shift(base_d)
    omega_c = base_c + delta_c * np.eye(p)
    omega_d = base_d + delta_d * np.eye(p)
    delta_star = omega_d - omega_c

    truth = GroundTruth(
        omega_c=SymMatrix.of(omega_c, MatrixRole.PRECISION),
        omega_d=SymMatrix.of(omega_d, MatrixRole.PRECISION),
        delta_star=SymMatrix.of(delta_star, MatrixRole.DIFFERENTIAL),
        support=GroundTruth.support_of(delta_star),
        k=int(np.count_nonzero(delta_star)),
        model=GraphModel.MODEL2,
        p=p,
        s=s,
        seed=seed,
        delta_c=delta_c,
        delta_d=delta_d,
    )
    if min(min_eigenvalue(truth.omega_c), min_eigenvalue(truth.omega_d)) <= 0:
        raise InvalidInputError(f"model 2 seed={seed}: precision matrices are not positive definite")
    logger.info("model 2 p=%d s=%g seed=%d: k=%d, delta_c=%.4g, delta_d=%.4g", p, s, seed, truth.k, delta_c, delta_d)
    return truth
