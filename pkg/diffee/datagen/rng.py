"""Named, seedable random streams.

Every random draw comes from a numpy PCG64 generator whose SeedSequence is
(seed, spawn_key=(stream,)). A stream id names one matrix or one sample
block, so each matrix per condition per cell owns an independent child
stream and results do not depend on draw order across streams.
"""

from enum import IntEnum

import numpy as np


class Stream(IntEnum):
    GRAPH = 0
    WEIGHTS = 1
    LABELS = 2
    B_C = 3
    B_D = 4
    B_SHARED = 5
    SAMPLE_C = 6
    SAMPLE_D = 7


def child_rng(seed: int, stream: Stream) -> np.random.Generator:
    """Generator for one named stream of one seed"""
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream),))
    return np.random.Generator(np.random.PCG64(sequence))
