from typing import Dict

from diffee.core.errors import InvalidInputError
from diffee.estimators.elementary import ee_sggm, exact_backward_map, proxy_backward_map, thresholded_precision
from diffee.estimators.implementations.diffee_estimator import DiffeeEstimator, diffee_fit, diffee_path
from diffee.estimators.implementations.naive_estimator import NaiveTwoStepEstimator, naive_path, naive_two_step
from diffee.estimators.protocols.estimator_protocol import DifferentialEstimatorProtocol
from diffee.estimators.selection import default_v_grid, select_v, theoretical_v

# Registry of estimators addressable by method name
ESTIMATORS: Dict[str, DifferentialEstimatorProtocol] = {
    DiffeeEstimator.name: DiffeeEstimator(),
    NaiveTwoStepEstimator.name: NaiveTwoStepEstimator(),
}


def get_estimator(method: str) -> DifferentialEstimatorProtocol:
    """Look up a registered estimator by method name"""
    try:
        return ESTIMATORS[method]
    except KeyError:
        raise InvalidInputError(f"unknown method {method!r}; choose from {sorted(ESTIMATORS)}") from None


__all__ = [
    "ESTIMATORS",
    "DiffeeEstimator",
    "DifferentialEstimatorProtocol",
    "NaiveTwoStepEstimator",
    "default_v_grid",
    "diffee_fit",
    "diffee_path",
    "ee_sggm",
    "exact_backward_map",
    "get_estimator",
    "naive_path",
    "naive_two_step",
    "proxy_backward_map",
    "select_v",
    "theoretical_v",
    "thresholded_precision",
]
