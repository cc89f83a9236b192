"""Binary BCH component codes and their even-weight subcodes.

Codewords are length-n int8 arrays where index i holds the coefficient of
x^i. Encoding is systematic with the n-k parity bits in positions
0..n-k-1 and the message in positions n-k..n-1.

Even-weight subcodes are decoded with the plain BCH decoder followed by a
parity check on the corrected word. Since the BCH decoder is unique within
radius t, an odd-weight result means no even-weight codeword lies within t,
so this is exact bounded-distance decoding for the subcode; as a side
effect it rejects roughly half of the BCH-level miscorrections.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import LengthMismatch, UnsupportedParameters
from .galois import (
    FieldSpec,
    build_field,
    cyclotomic_coset,
    degree,
    minimal_polynomial,
    poly_lcm,
    poly_mod,
    poly_mul,
    poly_to_str,
)


@dataclass(frozen=True, eq=False)
class ComponentCodeSpec:
    field: FieldSpec = dataclasses.field(repr=False)
    n: int
    k: int
    t: int
    d_des: int
    even_weight: bool
    generator: int = dataclasses.field(repr=False)

    @property
    def k0(self) -> int:
        """Dimension of the parent BCH code."""
        return self.k + 1 if self.even_weight else self.k

    @property
    def name(self) -> str:
        kind = "even" if self.even_weight else "bch"
        return f"({self.n},{self.k},{self.t})-{kind}"

    def generator_str(self) -> str:
        return poly_to_str(self.generator)

    @cached_property
    def tables(self) -> tuple:
        """(ptab, exp, log) arrays in the layout the kernels expect."""
        n = self.n
        exp = np.empty(2 * n, dtype=np.int64)
        exp[:n] = self.field.antilog[:n]
        exp[n:] = self.field.antilog[:n]
        log = self.field.log.astype(np.int64)
        log[0] = 0
        i = np.arange(n)
        ptab = np.stack([exp[(i * (2 * j + 1)) % n] for j in range(self.t)])
        return np.ascontiguousarray(ptab), exp, log

    @cached_property
    def parity_matrix(self) -> np.ndarray:
        """k x (n-k) matrix P with parity = message @ P (mod 2)."""
        r = self.n - self.k
        p = np.zeros((self.k, r), dtype=np.uint8)
        for j in range(self.k):
            rem = poly_mod(1 << (r + j), self.generator)
            for i in range(r):
                p[j, i] = rem >> i & 1
        return p

def build_code(field: FieldSpec | int, t: int, even_weight: bool = False) -> ComponentCodeSpec:
    """BCH code of length 2^nu - 1 correcting ``t`` errors.

    ``field`` is a FieldSpec or just nu (then the default primitive
    polynomial is used).
    """
    if isinstance(field, int):
        field = build_field(field)
    n = field.order
    if t < 1:
        raise UnsupportedParameters(f"t={t} must be positive")
    g = 1
    seen: set[int] = set()
    for i in range(1, 2 * t, 2):
        if i % n in seen:
            continue
        seen.update(cyclotomic_coset(field, i))
        g = poly_lcm(g, minimal_polynomial(field, i))
    if 0 in seen:
        raise UnsupportedParameters(f"t={t} too large for n={n}")
    if even_weight:
        g = poly_mul(g, 0b11)
    k = n - degree(g)
    if k < 1 or 2 * t + 1 > n:
        raise UnsupportedParameters(f"(n={n}, t={t}) leaves no message bits")
    d_des = 2 * t + 2 if even_weight else 2 * t + 1
    return ComponentCodeSpec(field, n, k, t, d_des, even_weight, g)


def _as_word(spec: ComponentCodeSpec, word) -> np.ndarray:
    w = np.ascontiguousarray(word, dtype=np.int8)
    if w.shape != (spec.n,):
        raise LengthMismatch(f"expected length {spec.n}, got {w.shape}")
    return w


def encode(spec: ComponentCodeSpec, message) -> np.ndarray:
    m = np.asarray(message, dtype=np.uint8)
    if m.shape != (spec.k,):
        raise LengthMismatch(f"message length {m.shape} != k={spec.k}")
    out = np.empty(spec.n, dtype=np.int8)
    r = spec.n - spec.k
    out[:r] = (m.astype(np.int64) @ spec.parity_matrix) & 1
    out[r:] = m
    return out


def encode_many(spec: ComponentCodeSpec, messages: np.ndarray) -> np.ndarray:
    """Row-wise systematic encoding of a (rows, k) message array."""
    m = np.asarray(messages)
    if m.ndim != 2 or m.shape[1] != spec.k:
        raise LengthMismatch(f"messages shape {m.shape} incompatible with k={spec.k}")
    r = spec.n - spec.k
    out = np.empty((m.shape[0], spec.n), dtype=np.int8)
    # float matmul goes through BLAS; exact for counts < 2^53
    out[:, :r] = (m.astype(np.float64) @ spec.parity_matrix.astype(np.float64)).astype(np.int64) & 1
    out[:, r:] = m
    return out


def syndromes(spec: ComponentCodeSpec, word) -> np.ndarray:
    """S_1..S_2t (plus the overall parity bit for even-weight codes)."""
    w = _as_word(spec, word)
    ptab, exp, log = spec.tables
    synd = np.empty(2 * spec.t, dtype=np.int64)
    kernels.syndromes(w, ptab, exp, log, spec.n, spec.t, synd)
    if spec.even_weight:
        return np.append(synd, kernels.parity(w, spec.n))
    return synd


def is_codeword(spec: ComponentCodeSpec, word) -> bool:
    w = _as_word(spec, word)
    ptab, exp, log = spec.tables
    synd = np.empty(2 * spec.t, dtype=np.int64)
    return bool(kernels.is_codeword(w, ptab, exp, log, spec.n, spec.t, spec.even_weight, synd))


@dataclass(frozen=True, eq=False)
class BddResult:
    """Outcome of bounded-distance decoding; ``codeword`` is None on failure."""

    codeword: np.ndarray | None
    flips: tuple[int, ...] = ()

    @property
    def success(self) -> bool:
        return self.codeword is not None


class _Scratch:
    def __init__(self, t: int):
        nt = 2 * t
        self.synd = np.empty(nt, np.int64)
        self.lam = np.empty(nt + 1, np.int64)
        self.bb = np.empty(nt + 1, np.int64)
        self.tmp = np.empty(nt + 1, np.int64)
        self.pos = np.empty(nt + 1, np.int64)


def bdd(spec: ComponentCodeSpec, word) -> BddResult:
    w = _as_word(spec, word)
    ptab, exp, log = spec.tables
    s = _Scratch(spec.t)
    k = kernels.bdd(w, ptab, exp, log, spec.n, spec.t, spec.even_weight,
                    s.synd, s.lam, s.bb, s.tmp, s.pos)
    if k < 0:
        return BddResult(None)
    out = w.copy()
    flips = tuple(sorted(int(p) for p in s.pos[:k]))
    out[list(flips)] ^= 1
    return BddResult(out, flips)
