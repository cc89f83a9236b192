"""Fast invariant suite behind ``drsd selftest``.

Each check returns ``(name, ok, detail)``. Everything is seeded, so two
runs print the same log.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Callable

import numpy as np

from .bch import ComponentCodeSpec, bdd, build_code, encode_many
from .drs import (
    Accepted,
    AlreadyCodeword,
    DrsRegister,
    Failure,
    Rejected,
    apply_decision_feedback,
    bump_t_a,
)
from .eaed import eaed_decode
from .galois import build_field, gf_inv, gf_mul
from .kernels import ERASED
from .rng import WordStream

Check = tuple[str, bool, str]


def check_field_axioms(seed: int = 1) -> Check:
    rng = np.random.default_rng(seed)
    for nu in (4, 8):
        f = build_field(nu)
        q = f.size
        a, b, c = rng.integers(0, q, (3, 2000))
        for x, y, z in zip(a.tolist(), b.tolist(), c.tolist()):
            if gf_mul(f, x, gf_mul(f, y, z)) != gf_mul(f, gf_mul(f, x, y), z):
                return "field axioms", False, f"associativity fails in GF(2^{nu}) at {x},{y},{z}"
            if gf_mul(f, x, y ^ z) != gf_mul(f, x, y) ^ gf_mul(f, x, z):
                return "field axioms", False, f"distributivity fails in GF(2^{nu}) at {x},{y},{z}"
        for x in range(1, q):
            if gf_mul(f, x, gf_inv(f, x)) != 1:
                return "field axioms", False, f"inverse of {x} wrong in GF(2^{nu})"
    return "field axioms", True, "GF(16), GF(256): 2000 triples each, all inverses"


def _codewords(spec: ComponentCodeSpec) -> np.ndarray:
    k = spec.k
    msgs = (np.arange(1 << k)[:, None] >> np.arange(k)) & 1
    return encode_many(spec, msgs)


def check_bdd_exhaustive(spec: ComponentCodeSpec) -> Check:
    words = _codewords(spec)
    patterns = [()] + [(i,) for i in range(spec.n)] + list(itertools.combinations(range(spec.n), 2))
    for c in words:
        for p in patterns:
            y = c.copy()
            y[list(p)] ^= 1
            res = bdd(spec, y)
            if not res.success or not np.array_equal(res.codeword, c):
                return "bdd exhaustive", False, f"{spec.name}: pattern {p} not corrected"
    return "bdd exhaustive", True, f"{spec.name}: {len(words)} codewords x {len(patterns)} patterns"


def check_eaed_sphere(spec: ComponentCodeSpec, trials: int = 200, seed: int = 2) -> Check:
    rng = np.random.default_rng(seed)
    words = _codewords(spec)
    count = 0
    for e in range(spec.t + 1):
        for E in range(spec.d_des - 2 * e):
            for _ in range(trials):
                c = words[rng.integers(len(words))]
                pos = rng.choice(spec.n, e + E, replace=False)
                y = c.copy()
                y[pos[:e]] ^= 1
                y[pos[e:]] = ERASED
                res = eaed_decode(spec, y, WordStream.from_generator(rng))
                count += 1
                if not res.decoded or not np.array_equal(res.word, c):
                    return "eaed sphere", False, f"{spec.name}: e={e} E={E} not corrected"
    return "eaed sphere", True, f"{spec.name}: {count} trials inside the sphere"


def check_drs_fuzz(events: int = 10_000, seed: int = 3) -> Check:
    rng = np.random.default_rng(seed)
    n = 15
    reg = DrsRegister(rng.integers(0, 32, (n, n)).astype(np.int8), 9)
    for _ in range(events):
        kind = rng.integers(4)
        flat = rng.choice(n * n, int(rng.integers(1, 4)), replace=False)
        pos = tuple((int(f) // n, int(f) % n) for f in flat)
        before = reg.scores.copy()
        if kind == 0:
            ev = Rejected(pos)
        elif kind == 1:
            ev = Accepted(pos)
        elif kind == 2:
            row = int(rng.integers(n))
            ev = AlreadyCodeword(tuple((row, j) for j in range(n)))
        else:
            ev = Failure()
        apply_decision_feedback(reg, ev)
        if reg.scores.min() < 0 or reg.scores.max() > 31:
            return "drs fuzz", False, "score left [0, 31]"
        if kind == 3 and not np.array_equal(before, reg.scores):
            return "drs fuzz", False, "failure event changed scores"
        if np.abs(reg.scores.astype(int) - before).max() > 1:
            return "drs fuzz", False, "update larger than one"
    ts = []
    for it in range(1, 16):
        bump_t_a(reg, it)
        ts.append(reg.t_a)
    if ts[4::5] != [10, 11, 12] or ts[3] != 9:
        return "drs fuzz", False, f"t_a schedule {ts}"
    return "drs fuzz", True, f"{events} events, t_a 9 -> 10 -> 11 -> 12"


def corrupt_generator(spec: ComponentCodeSpec) -> ComponentCodeSpec:
    """Test hook: flip the x^1 coefficient of the generator polynomial."""
    return dataclasses.replace(spec, generator=spec.generator ^ 0b10)


def run(inject_fault: bool = False) -> list[Check]:
    bch15 = build_code(4, 2)
    even15 = build_code(4, 2, even_weight=True)
    target = corrupt_generator(bch15) if inject_fault else bch15
    checks: list[Callable[[], Check]] = [
        check_field_axioms,
        lambda: check_bdd_exhaustive(target),
        lambda: check_eaed_sphere(bch15),
        lambda: check_eaed_sphere(even15),
        check_drs_fuzz,
    ]
    results = []
    for fn in checks:
        try:
            results.append(fn())
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            results.append((getattr(fn, "__name__", "check"), False, f"{type(exc).__name__}: {exc}"))
    return results
