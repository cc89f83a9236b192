"""Arithmetic in GF(2^nu) and polynomials over GF(2) / GF(2^nu).

Field elements are ints in polynomial basis (bit i is the coefficient of
alpha^i), so addition is XOR. Polynomials over GF(2) are int bitmasks with
bit i holding the coefficient of x^i.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, NonPrimitivePolynomial, UnsupportedParameters

# x^3+x+1, x^4+x+1, ..., x^7+x^3+1, x^8+x^4+x^3+x^2+1, x^9+x^4+1, x^10+x^3+1
DEFAULT_PRIM_POLYS = {
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
}


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(2^nu) with log/antilog tables.

    ``antilog[i] = alpha^i`` for ``0 <= i < 2^nu`` (the last entry wraps to 1);
    ``log[x]`` is the discrete log of ``x != 0`` and ``log[0] = -1``.
    """

    nu: int
    prim_poly: int
    antilog: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return 1 << self.nu

    @property
    def order(self) -> int:
        """Multiplicative order of alpha, 2^nu - 1 (the component length n)."""
        return (1 << self.nu) - 1


def build_field(nu: int, prim_poly: int | None = None) -> FieldSpec:
    if not 2 <= nu <= 16:
        raise UnsupportedParameters(f"nu={nu} outside supported range")
    if prim_poly is None:
        if nu not in DEFAULT_PRIM_POLYS:
            raise UnsupportedParameters(f"no default primitive polynomial for nu={nu}")
        prim_poly = DEFAULT_PRIM_POLYS[nu]
    if prim_poly.bit_length() - 1 != nu:
        raise NonPrimitivePolynomial(f"{prim_poly:#b} does not have degree {nu}")

    size = 1 << nu
    order = size - 1
    antilog = np.zeros(size, dtype=np.int32)
    log = np.full(size, -1, dtype=np.int32)
    x = 1
    for i in range(order):
        if log[x] != -1:
            raise NonPrimitivePolynomial(
                f"{prim_poly:#b}: alpha has order {i} < {order}"
            )
        antilog[i] = x
        log[x] = i
        x <<= 1
        if x & size:
            x ^= prim_poly
    if x != 1:
        raise NonPrimitivePolynomial(f"{prim_poly:#b}: cycle does not close at {order}")
    antilog[order] = 1
    antilog.flags.writeable = False
    log.flags.writeable = False
    return FieldSpec(nu, prim_poly, antilog, log)


def gf_add(a: int, b: int) -> int:
    return a ^ b


def gf_mul(f: FieldSpec, a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return int(f.antilog[(int(f.log[a]) + int(f.log[b])) % f.order])


def gf_inv(f: FieldSpec, a: int) -> int:
    if a == 0:
        raise DivisionByZero("0 has no inverse")
    return int(f.antilog[(f.order - int(f.log[a])) % f.order])


def gf_div(f: FieldSpec, a: int, b: int) -> int:
    return gf_mul(f, a, gf_inv(f, b))


def gf_pow(f: FieldSpec, a: int, e: int) -> int:
    if a == 0:
        if e == 0:
            return 1
        if e < 0:
            raise DivisionByZero("0 has no inverse")
        return 0
    return int(f.antilog[(int(f.log[a]) * e) % f.order])


def alpha_pow(f: FieldSpec, e: int) -> int:
    return int(f.antilog[e % f.order])


def poly_eval(f: FieldSpec, p: Sequence[int], x: int) -> int:
    """Horner evaluation of ``sum p[i] x^i`` (coefficients low degree first)."""
    acc = 0
    for c in reversed(p):
        acc = gf_mul(f, acc, x) ^ int(c)
    return acc


def poly_mul_gf(f: FieldSpec, a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two polynomials with GF(2^nu) coefficients (low degree first)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] ^= gf_mul(f, int(ai), int(bj))
    return out


# ---- GF(2) polynomials as bitmasks ---------------------------------------


def degree(p: int) -> int:
    """Degree of a GF(2) polynomial; -1 for the zero polynomial."""
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise DivisionByZero("polynomial division by zero")
    db = degree(b)
    q = 0
    while a and degree(a) >= db:
        s = degree(a) - db
        q |= 1 << s
        a ^= b << s
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_lcm(a: int, b: int) -> int:
    return poly_divmod(poly_mul(a, b), poly_gcd(a, b))[0]


def poly_to_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def cyclotomic_coset(f: FieldSpec, i: int) -> list[int]:
    coset = []
    j = i % f.order
    while j not in coset:
        coset.append(j)
        j = (2 * j) % f.order
    return coset


def minimal_polynomial(f: FieldSpec, i: int) -> int:
    """Minimal polynomial of alpha^i over GF(2), as a bitmask."""
    p = [1]
    for j in cyclotomic_coset(f, i):
        p = poly_mul_gf(f, p, [alpha_pow(f, j), 1])
    if any(c not in (0, 1) for c in p):  # pragma: no cover - algebraic invariant
        raise ArithmeticError("minimal polynomial left GF(2)")
    return sum(int(c) << k for k, c in enumerate(p))
