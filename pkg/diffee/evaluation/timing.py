from typing import Any, Callable

from diffee.core.timing import timed


def timing_probe(f: Callable[[], Any]) -> float:
    """Monotonic wall-clock seconds spent running f once"""
    _, seconds = timed(f)
    return seconds


def best_of(f: Callable[[], Any], repeats: int = 3) -> float:
    """Fastest of several timing probes; damps scheduler noise"""
    return min(timing_probe(f) for _ in range(max(repeats, 1)))
