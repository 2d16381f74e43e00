import math
from itertools import product
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from diffee.models.params import TvPolicy
from diffee.models.report import CellKey
from diffee.models.truth import GraphModel

METHODS = ("diffee", "naive")


class VGridSpec(BaseModel):
    """{step * i | i = 1..size}, searched for the smallest invertible v"""
    step: float = Field(0.001, gt=0.0)
    size: int = Field(1000, ge=1)

    def values(self) -> List[float]:
        """The grid values in ascending order"""
        return [self.step * i for i in range(1, self.size + 1)]


class ExperimentConfig(BaseModel):
    """A sweep over (p, s, n_c, n_d) for one graph model"""
    model: GraphModel = GraphModel.MODEL2
    p_list: List[int] = Field(default_factory=lambda: [100], min_length=1)
    s_list: List[float] = Field(default_factory=lambda: [0.2], min_length=1)
    n_pairs: Optional[List[Tuple[int, int]]] = Field(None, description="Absolute (n_c, n_d) pairs")
    n_ratios: List[Tuple[float, float]] = Field(
        default_factory=lambda: [(0.5, 0.5)], min_length=1,
        description="(n_c, n_d) as multiples of p; used when n_pairs is absent",
    )
    seeds: List[int] = Field(default_factory=lambda: list(range(10)), min_length=1)
    methods: List[str] = Field(default_factory=lambda: ["diffee"], min_length=1)
    v_grid: VGridSpec = Field(default_factory=VGridSpec)
    tv_policy: TvPolicy = TvPolicy.OFF_DIAGONAL_ONLY
    v_floor_scale: Optional[float] = Field(
        None, gt=0.0, description="Search v only at or above a * sqrt(ln p / min(n_c, n_d))",
    )
    lambda_grid_size: int = Field(30, ge=1)
    lambda_grid_scale: float = Field(0.01, gt=0.0)
    record_timing: bool = True
    output_dir: Optional[str] = None

    model_config = ConfigDict(extra="forbid")

    @field_validator("model", mode="before")
    @classmethod
    def parse_model(cls, v):
        return GraphModel.parse(v)

    @field_validator("methods", mode="after")
    @classmethod
    def check_methods(cls, v: List[str]) -> List[str]:
        unknown = sorted(set(v) - set(METHODS))
        if unknown:
            raise ValueError(f"unknown methods {unknown}; choose from {list(METHODS)}")
        return v

    @field_validator("seeds", mode="after")
    @classmethod
    def check_seeds(cls, v: List[int]) -> List[int]:
        if any(seed < 0 for seed in v):
            raise ValueError("seeds must be non-negative")
        return v

    def sample_sizes(self, p: int) -> List[Tuple[int, int]]:
        if self.n_pairs is not None:
            return [tuple(pair) for pair in self.n_pairs]
        return [(max(2, math.floor(rc * p)), max(2, math.floor(rd * p))) for rc, rd in self.n_ratios]

    def cells(self) -> List[CellKey]:
        """Cross-product of the sweep in (p, s, n, method) order"""
        return [
            CellKey(model=self.model, p=p, s=s, n_c=n_c, n_d=n_d, method=method)
            for p, s in product(self.p_list, self.s_list)
            for n_c, n_d in self.sample_sizes(p)
            for method in self.methods
        ]

    @model_validator(mode="after")
    def check_cells(self) -> "ExperimentConfig":
        """Every cell must be valid for its generator"""
        for p, s in product(self.p_list, self.s_list):
            if p < 10:
                raise ValueError(f"generators require p >= 10, got {p}")
            if self.model is GraphModel.MODEL1 and not (0 < s <= 1 and math.floor(s * p * (p - 1) / 2) >= 1):
                raise ValueError(f"model 1 needs s in (0, 1] with s*p(p-1)/2 >= 1, got p={p}, s={s}")
            if self.model is GraphModel.MODEL2 and not 0 <= s <= 1:
                raise ValueError(f"model 2 needs s in [0, 1], got {s}")
            for n_c, n_d in self.sample_sizes(p):
                if n_c < 2 or n_d < 2:
                    raise ValueError(f"sample sizes must be >= 2, got ({n_c}, {n_d})")
        return self


def preset(name: str, model: GraphModel | str | int = GraphModel.MODEL2, **overrides) -> ExperimentConfig:
    """Named sweeps mirroring the published experiment sets"""
    presets = {
        "vary-p": dict(p_list=[50, 100, 200, 300, 400, 500], s_list=[0.2], n_ratios=[(0.5, 0.5)]),
        "vary-s": dict(p_list=[200], s_list=[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7], n_ratios=[(0.5, 0.5)]),
        "vary-n-high": dict(
            p_list=[200], s_list=[0.2],
            n_ratios=[(0.5, 0.5), (0.5, 0.25), (0.25, 0.5), (0.25, 0.25)],
        ),
        "vary-n-low": dict(p_list=[200], s_list=[0.2], n_ratios=[(1.0, 1.0), (2.0, 2.0), (3.0, 3.0)]),
    }
    if name not in presets:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(presets)}")
    return ExperimentConfig(model=GraphModel.parse(model), **{**presets[name], **overrides})


PRESET_NAMES = ("vary-p", "vary-s", "vary-n-high", "vary-n-low")
