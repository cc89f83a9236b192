"""Per-word random stream used inside the kernels.

The EaED fill and tie-break draw from a small xoshiro128** state so the
jitted and pure-Python paths consume identical sequences. Streams are
seeded from a numpy Generator, which is itself derived per frame from the
master seed.
"""
from __future__ import annotations

import numpy as np

from . import kernels


class WordStream:
    """Mutable xoshiro128** state (four 32-bit words in an int64 array)."""

    __slots__ = ("state",)

    def __init__(self, state: np.ndarray):
        state = np.asarray(state, dtype=np.int64).copy()
        if state.shape != (4,) or not state.any():
            raise ValueError("state must be four words, not all zero")
        self.state = state

    @classmethod
    def from_generator(cls, gen: np.random.Generator) -> "WordStream":
        return cls(gen.integers(1, 1 << 32, size=4, dtype=np.int64))

    @classmethod
    def from_seed(cls, seed: int) -> "WordStream":
        return cls.from_generator(np.random.default_rng(seed))

    def next_u32(self) -> int:
        return int(kernels.rng_next(self.state))

    def copy(self) -> "WordStream":
        return WordStream(self.state)


def as_stream(rng) -> WordStream:
    """Coerce a WordStream, numpy Generator, int seed or None to a WordStream."""
    if isinstance(rng, WordStream):
        return rng
    if isinstance(rng, np.random.Generator):
        return WordStream.from_generator(rng)
    return WordStream.from_generator(np.random.default_rng(rng))
