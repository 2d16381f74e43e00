"""Exception hierarchy shared by the library and the command line.

Every error carries the process exit code the CLI reports for it: 2 for
usage and validation problems, 1 for runtime and numeric failures.
"""

from typing import Optional


class DiffeeError(Exception):
    """Base class for every error raised by the package"""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidInputError(DiffeeError, ValueError):
    """Input data or parameters violate a precondition"""

    exit_code = 2


class DimensionMismatchError(InvalidInputError):
    """Two operands disagree on the number of variables"""


class MatrixFormatError(InvalidInputError):
    """A matrix file is unreadable, ragged or non-numeric"""


class NotInvertibleError(DiffeeError):
    """Smallest eigenvalue is at or below the inversion tolerance"""

    def __init__(
        self,
        min_eigenvalue: float,
        tolerance: float,
        condition: Optional[str] = None,
    ):
        self.min_eigenvalue = min_eigenvalue
        self.tolerance = tolerance
        self.condition = condition
        where = f" for condition '{condition}'" if condition else ""
        super().__init__(
            f"matrix is not invertible{where}: smallest eigenvalue "
            f"{min_eigenvalue:.6g} <= tolerance {tolerance:.6g}"
        )

    def for_condition(self, condition: str) -> "NotInvertibleError":
        """Return a copy annotated with the failing condition"""
        return NotInvertibleError(self.min_eigenvalue, self.tolerance, condition)


class SelectionFailedError(DiffeeError):
    """No value of the v grid makes both thresholded covariances invertible"""

    def __init__(self, best_min_eigenvalue: float, best_v: float, grid_size: int):
        self.best_min_eigenvalue = best_min_eigenvalue
        self.best_v = best_v
        super().__init__(
            f"no v among {grid_size} grid values makes both thresholded covariances "
            f"invertible; best smallest eigenvalue {best_min_eigenvalue:.6g} at v={best_v:g}"
        )


class CellFailedError(DiffeeError):
    """An experiment cell failed; wraps the inner error with its coordinates"""

    def __init__(self, coordinates: str, cause: Exception):
        self.coordinates = coordinates
        self.cause = cause
        super().__init__(f"cell {coordinates} failed: {cause}")
