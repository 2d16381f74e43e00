"""Header-less comma-separated matrix text files.

One matrix row per line, row-major, full dense columns, written with 17
significant digits so every float64 round-trips exactly.
"""

import logging
from pathlib import Path

import numpy as np

from diffee.core.errors import MatrixFormatError
from diffee.models.matrices import Condition, MatrixRole, SampleMatrix, SymMatrix

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def write_matrix(path: Path | str, matrix: np.ndarray | SymMatrix | SampleMatrix) -> Path:
    """Write a dense matrix in the shared text format"""
    if isinstance(matrix, SymMatrix):
        array = matrix.entries
    elif isinstance(matrix, SampleMatrix):
        array = matrix.data
    else:
        array = np.asarray(matrix, dtype=np.float64)
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    np.savetxt(target, np.atleast_2d(array), fmt=FLOAT_FORMAT, delimiter=",")
    logger.debug("wrote %s matrix to %s", "x".join(map(str, array.shape)), target)
    return target


def read_matrix(path: Path | str) -> np.ndarray:
    """Read a matrix file; ragged, empty or non-numeric files raise MatrixFormatError"""
    source = Path(path)
    try:
        array = np.loadtxt(source, delimiter=",", dtype=np.float64, ndmin=2)
    except (OSError, ValueError) as exc:
        raise MatrixFormatError(f"cannot read matrix file {source}: {exc}") from exc
    if array.size == 0:
        raise MatrixFormatError(f"matrix file {source} is empty")
    return array


def read_samples(path: Path | str, condition: Condition | str) -> SampleMatrix:
    """Read an n x p sample block for one condition"""
    array = read_matrix(path)
    try:
        return SampleMatrix.of(array, condition)
    except ValueError as exc:
        raise MatrixFormatError(f"{path}: {exc}") from exc


def read_sym(path: Path | str, role: MatrixRole | str) -> SymMatrix:
    """Read a square symmetric matrix"""
    array = read_matrix(path)
    try:
        return SymMatrix.of(array, role)
    except ValueError as exc:
        raise MatrixFormatError(f"{path}: {exc}") from exc
