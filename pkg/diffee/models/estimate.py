from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from diffee.models.matrices import SymMatrix


class ProxyMap(BaseModel):
    """[T_v(Σ̂_d)]⁻¹ − [T_v(Σ̂_c)]⁻¹ with the diagnostics of its two inversions"""
    map: SymMatrix = Field(..., description="Proxy backward mapping, role differential")
    v_used: float = Field(..., ge=0.0)
    min_eigs: Tuple[float, float] = Field(..., description="Smallest eigenvalues of T_v(Σ̂_c) and T_v(Σ̂_d)")
    seconds: float = Field(0.0, ge=0.0, description="Wall time spent building the map")

    model_config = ConfigDict(frozen=True)


class DiffEstimate(BaseModel):
    """One estimated differential network Δ̂"""
    delta: SymMatrix
    lambda_: float = Field(..., ge=0.0, alias="lambda")
    v: float = Field(..., ge=0.0)
    support_size: int = Field(..., ge=0, description="Strictly nonzero off-diagonal entries")
    threshold_seconds: float = Field(0.0, ge=0.0, description="Time in the final S_λ step")
    proxy_seconds: float = Field(0.0, ge=0.0, description="Time building the shared proxy map")
    shared_with: int = Field(1, ge=1, description="Number of estimates sharing the proxy map")

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    @property
    def fit_seconds(self) -> float:
        """Per-estimate cost with the shared proxy time amortised over the path"""
        return self.threshold_seconds + self.proxy_seconds / self.shared_with

    @classmethod
    def from_delta(
        cls,
        delta: SymMatrix,
        lam: float,
        v: float,
        threshold_seconds: float = 0.0,
        proxy_seconds: float = 0.0,
        shared_with: int = 1,
    ) -> "DiffEstimate":
        return cls(
            delta=delta,
            lambda_=lam,
            v=v,
            support_size=delta.off_diagonal_support_size(),
            threshold_seconds=threshold_seconds,
            proxy_seconds=proxy_seconds,
            shared_with=shared_with,
        )


class FitSidecar(BaseModel):
    """Structured-text record written next to estimated matrix files"""
    v: float
    v_rule: str = Field(..., description="'fixed', 'auto' (grid selection) or 'theory'")
    tv_policy: str
    lambdas: list[float]
    support_sizes: list[int]
    matrix_files: list[str]
    proxy_seconds: float
    total_seconds: float
    timing_scope: str = "sample covariance through final soft-threshold; excludes v selection and file I/O"
    f1: Optional[list[float]] = None
    precision: Optional[list[float]] = None
    recall: Optional[list[float]] = None
