from typing import List, Protocol

from diffee.models.estimate import DiffEstimate
from diffee.models.matrices import SampleMatrix
from diffee.models.params import HyperParams


class DifferentialEstimatorProtocol(Protocol):
    """Protocol defining the interface for differential network estimators"""

    name: str

    def fit(self, Xc: SampleMatrix, Xd: SampleMatrix, h: HyperParams) -> DiffEstimate:
        """Estimate Δ at the single λ carried by h"""
        ...

    def path(self, Xc: SampleMatrix, Xd: SampleMatrix, h: HyperParams) -> List[DiffEstimate]:
        """Estimate Δ at every λ of the grid carried by h"""
        ...
