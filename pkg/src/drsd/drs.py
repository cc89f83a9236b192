"""Dynamic reliability score register.

Scores are 5-bit integers clamped to [0, 31]. A bit is an anchor when its
score is strictly above the current threshold ``t_a``. The product decoder
kernel applies the same rules inline; this module is the readable form and
the one the tests fuzz.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .kernels import SCORE_MAX

TA_BUMP_PERIOD = 5

# initial anchor threshold by correction radius; (127, t=4) is special-cased
_DEFAULT_TA = {2: 9, 3: 10, 4: 12}


def default_t_a(n: int, t: int) -> int:
    if n == 127 and t == 4:
        return 14
    try:
        return _DEFAULT_TA[t]
    except KeyError:
        raise ValueError(f"no default anchor threshold for t={t}") from None


Position = tuple[int, int]


@dataclass(frozen=True)
class Rejected:
    """Decision discarded; the conflicting anchors lose one point."""

    anchors: tuple[Position, ...]


@dataclass(frozen=True)
class Accepted:
    """Decision written back; every flipped bit loses one point."""

    flipped: tuple[Position, ...]


@dataclass(frozen=True)
class AlreadyCodeword:
    """Word needed no decoding; every bit in it gains one point."""

    positions: tuple[Position, ...]


@dataclass(frozen=True)
class Failure:
    pass


Event = Union[Rejected, Accepted, AlreadyCodeword, Failure]


@dataclass
class DrsRegister:
    scores: np.ndarray
    t_a: int

    @classmethod
    def from_scores(cls, scores, t_a: int) -> "DrsRegister":
        s = np.array(scores, dtype=np.int8)
        if s.min() < 0 or s.max() > SCORE_MAX:
            raise ValueError("scores must lie in [0, 31]")
        return cls(s, int(t_a))

    def is_anchor(self, pos: Position) -> bool:
        return bool(self.scores[pos] > self.t_a)

    def anchors(self) -> np.ndarray:
        return self.scores > self.t_a


def is_anchor(reg: DrsRegister, pos: Position) -> bool:
    return reg.is_anchor(pos)


def _shift(reg: DrsRegister, positions: Iterable[Position], delta: int) -> None:
    for pos in positions:
        v = int(reg.scores[pos]) + delta
        reg.scores[pos] = min(max(v, 0), SCORE_MAX)


def apply_decision_feedback(reg: DrsRegister, event: Event) -> DrsRegister:
    if isinstance(event, Rejected):
        _shift(reg, event.anchors, -1)
    elif isinstance(event, Accepted):
        _shift(reg, event.flipped, -1)
    elif isinstance(event, AlreadyCodeword):
        _shift(reg, event.positions, +1)
    elif not isinstance(event, Failure):
        raise TypeError(f"unknown event {event!r}")
    return reg


def bump_t_a(reg: DrsRegister, iteration_index: int) -> DrsRegister:
    """Raise t_a by one after every fifth completed DRSD iteration."""
    if iteration_index < 1:
        raise ValueError("iteration_index counts completed iterations from 1")
    if iteration_index % TA_BUMP_PERIOD == 0:
        reg.t_a += 1
    return reg
