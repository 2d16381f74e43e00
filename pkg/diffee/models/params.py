from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from diffee.core.errors import InvalidInputError


class TvPolicy(str, Enum):
    """Which entries the covariance threshold T_v acts on"""
    OFF_DIAGONAL_ONLY = "off_diagonal_only"
    ALL_ENTRIES = "all_entries"


class HyperParams(BaseModel):
    """Thresholding level v with either one λ or an ascending λ grid"""
    v: float = Field(..., ge=0.0, description="Covariance threshold for T_v")
    lambda_: Optional[float] = Field(None, ge=0.0, alias="lambda", description="Single regularization level")
    lambda_grid: Optional[List[float]] = Field(None, min_length=1, description="Strictly ascending λ values")
    tv_policy: TvPolicy = Field(TvPolicy.OFF_DIAGONAL_ONLY, description="Entries thresholded by T_v")

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    @field_validator("lambda_grid", mode="after")
    @classmethod
    def check_grid(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        """Grid must be non-negative and strictly ascending"""
        if v is None:
            return v
        if any(x < 0 for x in v):
            raise ValueError("lambda grid values must be >= 0")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("lambda grid must be strictly ascending")
        return v

    @model_validator(mode="after")
    def check_lambda_given(self) -> "HyperParams":
        if self.lambda_ is None and self.lambda_grid is None:
            raise ValueError("either lambda or lambda_grid is required")
        return self

    @classmethod
    def single(cls, v: float, lam: float, tv_policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY) -> "HyperParams":
        try:
            return cls(v=v, lambda_=lam, tv_policy=tv_policy)
        except ValidationError as exc:
            raise InvalidInputError(f"invalid hyper-parameters: {exc}") from exc

    @classmethod
    def grid(cls, v: float, grid: List[float], tv_policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY) -> "HyperParams":
        try:
            return cls(v=v, lambda_grid=list(grid), tv_policy=tv_policy)
        except ValidationError as exc:
            raise InvalidInputError(f"invalid hyper-parameters: {exc}") from exc

    @property
    def lambdas(self) -> List[float]:
        """λ values to evaluate: the grid if present, else the single λ"""
        if self.lambda_grid is not None:
            return list(self.lambda_grid)
        return [float(self.lambda_)]
