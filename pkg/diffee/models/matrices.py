from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from diffee.core.errors import InvalidInputError


class Condition(str, Enum):
    """Experimental condition a sample block was drawn from"""
    CONTROL = "c"
    CASE = "d"


class MatrixRole(str, Enum):
    """What a symmetric matrix represents"""
    COVARIANCE = "covariance"
    PRECISION = "precision"
    DIFFERENTIAL = "differential"


def _frozen_copy(values: Any) -> NDArray[np.float64]:
    array = np.array(values, dtype=np.float64, copy=True)
    array.setflags(write=False)
    return array


class SampleMatrix(BaseModel):
    """An n x p block of observations from one condition"""
    data: np.ndarray = Field(..., description="n samples (rows) by p variables (columns)")
    condition: Condition = Field(..., description="Condition the rows were drawn under")

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_validator("data", mode="before")
    @classmethod
    def check_data(cls, v: Any) -> NDArray[np.float64]:
        """Require a finite 2-D array with at least two rows"""
        array = _frozen_copy(v)
        if array.ndim != 2:
            raise ValueError(f"sample matrix must be 2-D, got {array.ndim}-D")
        if array.shape[0] < 2 or array.shape[1] < 1:
            raise ValueError(f"sample matrix needs n >= 2 and p >= 1, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ValueError("sample matrix contains non-finite entries")
        return array

    @classmethod
    def of(cls, data: Any, condition: Condition | str) -> "SampleMatrix":
        """Build a sample matrix, reporting violations as InvalidInputError"""
        try:
            return cls(data=data, condition=Condition(condition))
        except (ValidationError, ValueError) as exc:
            raise InvalidInputError(f"invalid sample matrix: {exc}") from exc

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def p(self) -> int:
        return self.data.shape[1]


class SymMatrix(BaseModel):
    """A dense, exactly symmetric p x p matrix tagged with its role"""
    entries: np.ndarray = Field(..., description="Row-major p x p entries")
    role: MatrixRole = Field(..., description="Covariance, precision or differential network")

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_validator("entries", mode="before")
    @classmethod
    def check_entries(cls, v: Any) -> NDArray[np.float64]:
        """Require a finite square array with bit-exact symmetry"""
        array = _frozen_copy(v)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
            raise ValueError(f"symmetric matrix must be square and non-empty, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ValueError("symmetric matrix contains non-finite entries")
        if not np.array_equal(array, array.T):
            raise ValueError("matrix is not exactly symmetric")
        return array

    @classmethod
    def of(cls, entries: Any, role: MatrixRole | str) -> "SymMatrix":
        """Build a symmetric matrix, reporting violations as InvalidInputError"""
        try:
            return cls(entries=entries, role=MatrixRole(role))
        except (ValidationError, ValueError) as exc:
            raise InvalidInputError(f"invalid symmetric matrix: {exc}") from exc

    @classmethod
    def symmetrized(cls, entries: Any, role: MatrixRole | str) -> "SymMatrix":
        """Average with the transpose before building; removes round-off asymmetry"""
        array = np.asarray(entries, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise InvalidInputError(f"cannot symmetrize array of shape {array.shape}")
        return cls.of((array + array.T) / 2.0, role)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def with_role(self, role: MatrixRole | str) -> "SymMatrix":
        return SymMatrix(entries=self.entries, role=MatrixRole(role))

    def off_diagonal_support_size(self) -> int:
        """Number of strictly nonzero off-diagonal entries (both triangles)"""
        return int(np.count_nonzero(self.entries) - np.count_nonzero(np.diag(self.entries)))
