import logging
from typing import List

from diffee.core.errors import InvalidInputError
from diffee.core.timing import timed
from diffee.estimators.elementary import thresholded_precision
from diffee.linalg import check_same_dim, soft_threshold_off_diagonal
from diffee.models.estimate import DiffEstimate
from diffee.models.matrices import MatrixRole, SampleMatrix, SymMatrix
from diffee.models.params import HyperParams, TvPolicy

logger = logging.getLogger(__name__)


def _difference(prec_c: SymMatrix, prec_d: SymMatrix, lam: float) -> SymMatrix:
    omega_c = soft_threshold_off_diagonal(prec_c, lam)
    omega_d = soft_threshold_off_diagonal(prec_d, lam)
    return SymMatrix(entries=omega_d.entries - omega_c.entries, role=MatrixRole.DIFFERENTIAL)


def _precisions(Xc: SampleMatrix, Xd: SampleMatrix, v: float, policy: TvPolicy):
    check_same_dim(Xc.p, Xd.p, "sample matrices")
    return timed(lambda: (thresholded_precision(Xc, v, policy), thresholded_precision(Xd, v, policy)))


def naive_path(Xc: SampleMatrix, Xd: SampleMatrix, h: HyperParams) -> List[DiffEstimate]:
    """Two separate elementary estimates per λ, differenced without further shrinkage"""
    (prec_c, prec_d), seconds = _precisions(Xc, Xd, h.v, h.tv_policy)
    grid = h.lambdas
    path = []
    for lam in grid:
        delta, step_seconds = timed(lambda: _difference(prec_c, prec_d, lam))
        path.append(
            DiffEstimate.from_delta(
                delta, lam, h.v,
                threshold_seconds=step_seconds, proxy_seconds=seconds, shared_with=len(grid),
            )
        )
    return path


def naive_two_step(
    Xc: SampleMatrix,
    Xd: SampleMatrix,
    v: float,
    lam: float,
    policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY,
) -> DiffEstimate:
    """Ω̂_d − Ω̂_c from two independent elementary estimates"""
    return naive_path(Xc, Xd, HyperParams.single(v, lam, policy))[0]


class NaiveTwoStepEstimator:
    """Naive two-step baseline behind the estimator protocol"""

    name = "naive"

    def fit(self, Xc: SampleMatrix, Xd: SampleMatrix, h: HyperParams) -> DiffEstimate:
        if h.lambda_ is None:
            raise InvalidInputError("fit needs a single lambda; use path for a grid")
        return naive_two_step(Xc, Xd, h.v, h.lambda_, h.tv_policy)

    def path(self, Xc: SampleMatrix, Xd: SampleMatrix, h: HyperParams) -> List[DiffEstimate]:
        if h.lambda_grid is None:
            raise InvalidInputError("path needs a lambda grid")
        return naive_path(Xc, Xd, h)
