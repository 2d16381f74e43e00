from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from diffee.models.truth import GraphModel


class EdgeScore(BaseModel):
    """Edge-level confusion counts over the off-diagonal upper triangle"""
    tp: int = Field(..., ge=0)
    fp: int = Field(..., ge=0)
    fn: int = Field(..., ge=0)
    tn: int = Field(..., ge=0)
    precision: float = Field(..., ge=0.0, le=1.0)
    recall: float = Field(..., ge=0.0, le=1.0)
    f1: float = Field(..., ge=0.0, le=1.0)
    fp_rate: float = Field(..., ge=0.0, le=1.0, description="fp / (fp + tn): share of non-edges predicted")

    model_config = ConfigDict(frozen=True)

    @property
    def predicted(self) -> int:
        return self.tp + self.fp


class LambdaScore(BaseModel):
    """Score of one point of a λ path"""
    lambda_: float = Field(..., alias="lambda")
    v: float
    score: EdgeScore
    support_size: int
    fit_seconds: float

    model_config = ConfigDict(frozen=True, populate_by_name=True)


class CellKey(BaseModel):
    """Coordinates of one experimental cell"""
    model: GraphModel
    p: int = Field(..., ge=2)
    s: float = Field(..., ge=0.0, le=1.0)
    n_c: int = Field(..., ge=2)
    n_d: int = Field(..., ge=2)
    method: str

    model_config = ConfigDict(frozen=True)

    def label(self) -> str:
        return f"{self.model.value}/p={self.p}/s={self.s:g}/nc={self.n_c}/nd={self.n_d}/{self.method}"


class EvalReport(BaseModel):
    """Result of one (cell, seed): scores at the best λ plus the whole path"""
    cell: CellKey
    seed: int
    tp: int
    fp: int
    fn: int
    tn: int
    precision: float
    recall: float
    f1: float
    fp_rate: float
    best_lambda: float
    v: float
    fit_time_total: Optional[float] = Field(None, description="Seconds summed over the λ grid")
    per_lambda: List[LambdaScore]


class CellReport(BaseModel):
    """Seed-averaged result of one experimental cell"""
    cell: CellKey
    seeds: List[int]
    reports: List[EvalReport] = Field(default_factory=list)
    best_f1_mean: Optional[float] = None
    total_seconds: Optional[float] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None
