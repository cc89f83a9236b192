import itertools

import numpy as np
import pytest

from drsd.errors import DivisionByZero, NonPrimitivePolynomial
from drsd.galois import (
    DEFAULT_PRIM_POLYS,
    build_field,
    gf_add,
    gf_inv,
    gf_mul,
    gf_pow,
    minimal_polynomial,
    poly_divmod,
    poly_eval,
    poly_mod,
    poly_mul,
)


def clmul_mod(a, b, prim, nu):
    """Schoolbook GF(2^nu) product; independent of the log tables."""
    out = 0
    for i in range(nu):
        if b >> i & 1:
            out ^= a << i
    for d in range(2 * nu - 2, nu - 1, -1):
        if out >> d & 1:
            out ^= prim << (d - nu)
    return out


@pytest.fixture(scope="module")
def f16():
    return build_field(4, 0b10011)


def test_alpha4_reduces_to_alpha_plus_one(f16):
    # x^4 = x + 1 mod x^4+x+1
    assert f16.antilog[4] == 0b0011


def test_antilog_wraps(f16):
    assert f16.antilog[15] == f16.antilog[0] == 1


def test_reducible_polynomial_rejected():
    # x^4+x^2+1 = (x^2+x+1)^2
    with pytest.raises(NonPrimitivePolynomial):
        build_field(4, 0b10101)


def test_irreducible_but_not_primitive_rejected():
    # x^4+x^3+x^2+x+1 is irreducible with alpha of order 5
    with pytest.raises(NonPrimitivePolynomial):
        build_field(4, 0b11111)


@pytest.mark.parametrize("nu", sorted(DEFAULT_PRIM_POLYS))
def test_log_antilog_round_trip(nu):
    f = build_field(nu)
    x = np.arange(1, f.size)
    assert np.array_equal(f.antilog[f.log[x]], x)
    i = np.arange(f.order)
    assert np.array_equal(f.antilog[(i + f.order) % f.order], f.antilog[i])
    assert sorted(f.antilog[: f.order]) == list(range(1, f.size))


def test_mul_examples(f16):
    a = int(f16.antilog[1])
    assert gf_mul(f16, a, int(f16.antilog[3])) == 0b0011
    for x in range(16):
        assert gf_mul(f16, x, 0) == 0
    assert gf_inv(f16, int(f16.antilog[5])) == f16.antilog[10]
    with pytest.raises(DivisionByZero):
        gf_inv(f16, 0)


@pytest.mark.parametrize("nu", [4, 7, 8])
def test_mul_matches_schoolbook(nu):
    f = build_field(nu)
    for a, b in itertools.product(range(0, f.size, 3), range(0, f.size, 5)):
        assert gf_mul(f, a, b) == clmul_mod(a, b, f.prim_poly, nu)


@pytest.mark.parametrize("nu", range(3, 9))
def test_inverse_exhaustive(nu):
    f = build_field(nu)
    for a in range(1, f.size):
        assert gf_mul(f, a, gf_inv(f, a)) == 1


@pytest.mark.parametrize("nu", [7, 9])
def test_field_axioms_random(nu):
    f = build_field(nu)
    rng = np.random.default_rng(nu)
    for a, b, c in rng.integers(0, f.size, size=(10_000, 3)):
        a, b, c = int(a), int(b), int(c)
        assert gf_mul(f, a, gf_mul(f, b, c)) == gf_mul(f, gf_mul(f, a, b), c)
        assert gf_mul(f, a, b) == gf_mul(f, b, a)
        assert gf_mul(f, a, gf_add(b, c)) == gf_add(gf_mul(f, a, b), gf_mul(f, a, c))


def test_pow(f16):
    a = int(f16.antilog[2])
    assert gf_pow(f16, a, 0) == 1
    assert gf_pow(f16, a, 7) == f16.antilog[14]
    assert gf_pow(f16, 0, 3) == 0


def test_poly_eval(f16):
    for x in range(16):
        assert poly_eval(f16, [1], x) == 1
    # p(x) = x^2 + 1 at alpha: alpha^2 + 1
    alpha = int(f16.antilog[1])
    assert poly_eval(f16, [1, 0, 1], alpha) == int(f16.antilog[2]) ^ 1


def test_gf2_poly_ops():
    g = 0b111010001  # x^8+x^7+x^6+x^4+1
    assert poly_mod(poly_mul(g, 0b10), g) == 0
    assert poly_mul(0b11, 0b11) == 0b101
    q, r = poly_divmod(0b1011011, 0b1011)
    assert poly_mul(q, 0b1011) ^ r == 0b1011011
    assert r.bit_length() < 4
    with pytest.raises(DivisionByZero):
        poly_mod(5, 0)


def test_minimal_polynomials_gf16(f16):
    assert minimal_polynomial(f16, 1) == 0b10011
    assert minimal_polynomial(f16, 3) == 0b11111
    assert minimal_polynomial(f16, 5) == 0b111
