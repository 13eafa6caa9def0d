"""Reproducible random streams.

Every random draw in antimagic goes through a :class:`RngStream`. A stream is identified by a base seed and a stream
index, parallel workers use distinct stream indices so that results for a given ``(seed, workers)`` pair never
depend on scheduling.
"""
import logging
import secrets

import numpy as np

log = logging.getLogger(__name__)


def fresh_seed() -> int:
    """Draws a new 63 bits base seed from the OS entropy pool."""
    return secrets.randbits(63)


class RngStream:
    __slots__ = ['base_seed', 'stream_index', 'generator']

    def __init__(self, base_seed: int or None = None, stream_index: int = 0):
        if base_seed is None:
            base_seed = fresh_seed()
            log.info(f"using generated seed {base_seed}")
        self.base_seed = int(base_seed)
        self.stream_index = int(stream_index)
        self.generator = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(self.base_seed, spawn_key=(self.stream_index,))))

    def __repr__(self):
        return f"<RngStream: seed={self.base_seed} stream={self.stream_index}>"

    def spawn(self, stream_index: int) -> "RngStream":
        """Returns the stream with the same base seed and another index."""
        return RngStream(self.base_seed, stream_index)

    def shuffle(self, values: np.ndarray) -> np.ndarray:
        """Uniform in-place Fisher-Yates shuffle of a 1-D array, returns values."""
        self.generator.shuffle(values)
        return values

    def permutation(self, values: np.ndarray) -> np.ndarray:
        return self.generator.permutation(values)

    def permuted_rows(self, values: np.ndarray, rows: int) -> np.ndarray:
        """Returns a (rows, len(values)) array, each row an independent uniform permutation of values."""
        return self.generator.permuted(np.tile(values, (rows, 1)), axis=1)

    def random(self) -> float:
        return float(self.generator.random())

    def integers(self, low: int, high: int, size=None):
        return self.generator.integers(low, high, size=size)
