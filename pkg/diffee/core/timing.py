import time
from typing import Callable, Tuple, TypeVar

T = TypeVar("T")


def timed(f: Callable[[], T]) -> Tuple[T, float]:
    """Run f once; return its result and monotonic wall time in seconds"""
    start = time.perf_counter()
    result = f()
    return result, max(time.perf_counter() - start, 0.0)
