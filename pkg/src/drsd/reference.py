"""Readable DRSD / iterative EaED iteration built from the public component
operations (``bch.bdd``, ``eaed.eaed_reference``, ``drs.apply_decision_feedback``).

It is slow and exists to cross-check :func:`drsd.kernels.run_iteration`:
given the same frame, register and WordStream, both must produce identical
frames, scores and counters.
"""
from __future__ import annotations

import numpy as np

from .bch import ComponentCodeSpec, is_codeword
from .drs import Accepted, AlreadyCodeword, DrsRegister, Failure, Rejected, apply_decision_feedback
from .eaed import eaed_reference
from .kernels import ERASED
from .rng import WordStream


def _positions(axis: int, line: int, idx) -> tuple[tuple[int, int], ...]:
    idx = [int(i) for i in idx]
    if axis == 0:
        return tuple((line, i) for i in idx)
    return tuple((i, line) for i in idx)


def component_step(frame: np.ndarray, reg: DrsRegister | None, spec: ComponentCodeSpec,
                   axis: int, line: int, stream: WordStream, truth=None):
    """Decode one row (axis 0) or column (axis 1) in place; returns the event."""
    y = np.array(frame[line, :] if axis == 0 else frame[:, line])
    n = spec.n
    if is_codeword(spec, y):
        ev = AlreadyCodeword(_positions(axis, line, range(n)))
        if reg is not None:
            apply_decision_feedback(reg, ev)
        return ev
    res = eaed_reference(spec, y, stream)
    if not res.decoded:
        return Failure()
    cand = res.word
    if truth is not None:
        t_line = truth[line, :] if axis == 0 else truth[:, line]
        if np.any(cand != t_line):
            return Rejected(())
    flipped = np.flatnonzero((y != ERASED) & (cand != y))
    flip_pos = _positions(axis, line, flipped)
    if reg is not None:
        conflicts = tuple(p for p in flip_pos if reg.is_anchor(p))
        if conflicts:
            ev = Rejected(conflicts)
            apply_decision_feedback(reg, ev)
            return ev
    if axis == 0:
        frame[line, :] = cand
    else:
        frame[:, line] = cand
    ev = Accepted(flip_pos)
    if reg is not None:
        apply_decision_feedback(reg, ev)
    return ev


def iteration(frame: np.ndarray, reg: DrsRegister | None, spec: ComponentCodeSpec,
              stream: WordStream, truth=None) -> dict:
    """All rows then all columns; returns counters like the kernel's."""
    counts = {"accepted": 0, "rejected": 0, "failed": 0, "clean": 0, "changed": False}
    for axis in (0, 1):
        for line in range(spec.n):
            before = np.array(frame[line, :] if axis == 0 else frame[:, line])
            ev = component_step(frame, reg, spec, axis, line, stream, truth)
            if isinstance(ev, AlreadyCodeword):
                counts["clean"] += 1
            elif isinstance(ev, Rejected):
                counts["rejected"] += 1
            elif isinstance(ev, Failure):
                counts["failed"] += 1
            else:
                counts["accepted"] += 1
                after = frame[line, :] if axis == 0 else frame[:, line]
                counts["changed"] |= bool(np.any(after != before))
    return counts
