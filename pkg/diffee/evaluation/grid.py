from typing import List

import numpy as np

from diffee.core.errors import InvalidInputError

LAMBDA_GRID_SIZE = 30
LAMBDA_GRID_SCALE = 0.01


def lambda_grid(
    p: int,
    n_c: int,
    n_d: int,
    size: int = LAMBDA_GRID_SIZE,
    scale: float = LAMBDA_GRID_SCALE,
) -> List[float]:
    """{scale * sqrt(ln p / min(n_c, n_d)) * i | i = 1..size}"""
    if p < 2:
        raise InvalidInputError(f"lambda grid needs p >= 2, got {p}")
    if n_c < 1 or n_d < 1:
        raise InvalidInputError(f"lambda grid needs n_c, n_d >= 1, got {n_c}, {n_d}")
    if size < 1 or not scale > 0:
        raise InvalidInputError("lambda grid needs size >= 1 and scale > 0")
    step = scale * np.sqrt(np.log(p) / min(n_c, n_d))
    return [float(step * i) for i in range(1, size + 1)]
