import logging
from typing import Tuple

import numpy as np
from scipy import linalg

from diffee.core.errors import InvalidInputError, NotInvertibleError
from diffee.datagen.rng import Stream, child_rng
from diffee.linalg import invert_sym
from diffee.models.matrices import Condition, MatrixRole, SampleMatrix, SymMatrix
from diffee.models.truth import GroundTruth

logger = logging.getLogger(__name__)


def mvn_sample(
    omega: SymMatrix,
    n: int,
    seed: int | np.random.Generator,
    condition: Condition | str = Condition.CONTROL,
) -> SampleMatrix:
    """n i.i.d. draws from N(0, Ω⁻¹).

    Each row is L z with z standard normal and L the lower Cholesky factor of
    the covariance Ω⁻¹.
    """
    if n < 1:
        raise InvalidInputError(f"sample size must be >= 1, got {n}")
    try:
        sigma = invert_sym(omega, role=MatrixRole.COVARIANCE)
    except NotInvertibleError as exc:
        raise InvalidInputError(f"precision matrix is not positive definite: {exc}") from exc
    factor = linalg.cholesky(sigma.entries, lower=True, check_finite=False)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = rng.standard_normal((n, omega.dim))
    return SampleMatrix.of(z @ factor.T, condition)


def sample_pair(truth: GroundTruth, n_c: int, n_d: int) -> Tuple[SampleMatrix, SampleMatrix]:
    """Draw X_c and X_d on the truth's own per-condition streams"""
    x_c = mvn_sample(truth.omega_c, n_c, child_rng(truth.seed, Stream.SAMPLE_C), Condition.CONTROL)
    x_d = mvn_sample(truth.omega_d, n_d, child_rng(truth.seed, Stream.SAMPLE_D), Condition.CASE)
    logger.debug("sampled n_c=%d, n_d=%d for %s seed=%d", n_c, n_d, truth.model.value, truth.seed)
    return x_c, x_d
