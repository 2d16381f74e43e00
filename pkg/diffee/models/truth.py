from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from diffee.models.matrices import SymMatrix


class GraphModel(str, Enum):
    """Ground-truth graph-pair generator"""
    MODEL1 = "model1"
    MODEL2 = "model2"

    @classmethod
    def parse(cls, value: "GraphModel | str | int") -> "GraphModel":
        """Accept 1, '1', 'model1' or a GraphModel"""
        if isinstance(value, GraphModel):
            return value
        text = str(value).strip().lower()
        return cls(text if text.startswith("model") else f"model{text}")


class GroundTruth(BaseModel):
    """A simulated (Ω_c, Ω_d, Δ*) triple with Δ*'s support"""
    omega_c: SymMatrix
    omega_d: SymMatrix
    delta_star: SymMatrix
    support: List[Tuple[int, int]] = Field(..., description="Upper-triangle and diagonal index pairs of nonzero Δ*")
    k: int = Field(..., ge=0, description="Strictly nonzero entries of Δ* over the whole matrix")
    model: GraphModel
    p: int = Field(..., ge=1)
    s: float = Field(..., ge=0.0, le=1.0)
    seed: int = Field(..., ge=0)
    pd_boost: float = Field(0.0, ge=0.0, description="Diagonal shift added to both precisions (Model 1 repair)")
    delta_c: Optional[float] = Field(None, description="Model 2 diagonal shift of Ω_c")
    delta_d: Optional[float] = Field(None, description="Model 2 diagonal shift of Ω_d")
    hubs: Optional[List[int]] = Field(None, description="Model 1 hub nodes carrying Δ*")
    edge_count: Optional[int] = Field(None, description="Model 1 undirected edges of the Ω_d graph")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_construction(self) -> "GroundTruth":
        """Δ* = Ω_d − Ω_c exactly and k matches its nonzero count"""
        if not np.array_equal(self.delta_star.entries, self.omega_d.entries - self.omega_c.entries):
            raise ValueError("delta_star must equal omega_d - omega_c exactly")
        if self.k != int(np.count_nonzero(self.delta_star.entries)):
            raise ValueError("k must count the nonzero entries of delta_star")
        return self

    @staticmethod
    def support_of(delta: np.ndarray) -> List[Tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(delta))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]


class SimulationManifest(BaseModel):
    """Structured-text record of one simulated cell"""
    model: GraphModel
    p: int
    s: float
    n_c: int
    n_d: int
    seed: int
    k: int
    delta_c: Optional[float] = None
    delta_d: Optional[float] = None
    pd_boost: float = 0.0
    hubs: Optional[List[int]] = None
    edge_count: Optional[int] = None
    hub_edge_pooling: Optional[str] = None
    graph_law: Optional[str] = None
    rng: str = "numpy PCG64 via SeedSequence(seed, spawn_key=(stream,))"
    files: List[str] = Field(default_factory=list)
