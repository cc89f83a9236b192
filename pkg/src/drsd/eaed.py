"""Error-and-erasure decoding of one component word.

A ternary word is an int8 array over {0, 1, ERASED}. The decoder fills the
erasures with a random vector and its complement, runs BDD on both, and
arbitrates by validity and then by distance on the unerased positions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .bch import ComponentCodeSpec, bdd
from .errors import LengthMismatch, NoErasures
from .kernels import ERASED
from .rng import WordStream, as_stream

_SYMBOLS = {"0": 0, "1": 1, "?": ERASED}


def ternary(symbols) -> np.ndarray:
    """Build a ternary word from a string like ``"0?1"`` or a sequence of 0/1/2."""
    if isinstance(symbols, str):
        return np.array([_SYMBOLS[c] for c in symbols], dtype=np.int8)
    w = np.asarray(symbols, dtype=np.int8)
    if np.any((w < 0) | (w > ERASED)):
        raise ValueError("ternary symbols must be 0, 1 or ERASED")
    return w


def to_str(word) -> str:
    return "".join("01?"[int(v)] for v in word)


def erasure_count(y) -> int:
    return int(np.count_nonzero(np.asarray(y) == ERASED))


class Outcome(enum.Enum):
    DECODED = "decoded"
    NO_DECODE = "no_decode"
    BOTH_FAILED = "both_failed"


_STATUS = {
    kernels.NO_DECODE: Outcome.NO_DECODE,
    kernels.BOTH_FAILED: Outcome.BOTH_FAILED,
    kernels.DECODED: Outcome.DECODED,
}


@dataclass(frozen=True, eq=False)
class EaedResult:
    word: np.ndarray
    changed: bool
    outcome: Outcome

    @property
    def decoded(self) -> bool:
        return self.outcome is Outcome.DECODED


def fill_erasures(y, rng) -> tuple[np.ndarray, np.ndarray]:
    """Fill the erasures of ``y`` with a random vector and its complement."""
    y = ternary(y)
    if erasure_count(y) == 0:
        raise NoErasures("word has no erasures; use plain BDD")
    stream = as_stream(rng)
    y1 = np.empty_like(y)
    y2 = np.empty_like(y)
    kernels.fill_erasures(y, y.size, stream.state, y1, y2)
    return y1, y2


def dh_unerased(y, c) -> int:
    y = np.asarray(y)
    c = np.asarray(c)
    if y.shape != c.shape:
        raise LengthMismatch(f"{y.shape} vs {c.shape}")
    return int(np.count_nonzero((y != ERASED) & (y != c)))


def eaed_decode(spec: ComponentCodeSpec, y, rng) -> EaedResult:
    """Decode ternary word ``y``; ``rng`` is a WordStream, Generator or seed.

    Passing the same WordStream across calls continues one random lineage.
    """
    y = np.ascontiguousarray(ternary(y))
    if y.shape != (spec.n,):
        raise LengthMismatch(f"expected length {spec.n}, got {y.shape}")
    stream: WordStream = as_stream(rng)
    n, nt = spec.n, 2 * spec.t
    ptab, exp, log = spec.tables
    out = y.copy()
    st = kernels.eaed(
        y, ptab, exp, log, n, spec.t, spec.even_weight, spec.d_des, stream.state, out,
        np.empty(n, np.int8), np.empty(n, np.int8),
        np.empty(nt + 1, np.int64), np.empty(nt + 1, np.int64),
        np.empty(nt, np.int64), np.empty(nt + 1, np.int64),
        np.empty(nt + 1, np.int64), np.empty(nt + 1, np.int64),
    )
    outcome = _STATUS[int(st)]
    if outcome is not Outcome.DECODED:
        return EaedResult(y.copy(), False, outcome)
    return EaedResult(out, bool(np.any(out != y)), outcome)


def eaed_reference(spec: ComponentCodeSpec, y, stream: WordStream) -> EaedResult:
    """Straight-line EaED built on the public bdd; used to cross-check the kernel.

    Draws from ``stream`` in the same order as the kernel.
    """
    y = ternary(y)
    e = erasure_count(y)
    if e >= spec.d_des:
        return EaedResult(y.copy(), False, Outcome.NO_DECODE)
    if e == 0:
        r = bdd(spec, y)
        if not r.success:
            return EaedResult(y.copy(), False, Outcome.BOTH_FAILED)
        return EaedResult(r.codeword, bool(r.flips), Outcome.DECODED)
    y1, y2 = fill_erasures(y, stream)
    w1, w2 = bdd(spec, y1), bdd(spec, y2)
    if not (w1.success or w2.success):
        return EaedResult(y.copy(), False, Outcome.BOTH_FAILED)
    if w1.success and not w2.success:
        w = w1.codeword
    elif w2.success and not w1.success:
        w = w2.codeword
    else:
        d1, d2 = dh_unerased(y, w1.codeword), dh_unerased(y, w2.codeword)
        if d1 < d2:
            w = w1.codeword
        elif d1 > d2:
            w = w2.codeword
        else:
            w = w1.codeword if stream.next_u32() >> 31 == 0 else w2.codeword
    return EaedResult(w, True, Outcome.DECODED)
