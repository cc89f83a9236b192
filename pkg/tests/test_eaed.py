import numpy as np
import pytest

from drsd.bch import bdd, encode, is_codeword
from drsd.eaed import (
    Outcome,
    dh_unerased,
    eaed_decode,
    eaed_reference,
    erasure_count,
    fill_erasures,
    ternary,
    to_str,
)
from drsd.errors import LengthMismatch, NoErasures
from drsd.kernels import ERASED
from drsd.rng import WordStream


def corrupt(code, rng, errors, erasures):
    c = encode(code, rng.integers(0, 2, code.k))
    pos = rng.choice(code.n, size=errors + erasures, replace=False)
    y = c.copy()
    y[pos[:errors]] ^= 1
    y[pos[errors:]] = ERASED
    return c, y


def test_ternary_parsing():
    y = ternary("0?1")
    assert y.tolist() == [0, ERASED, 1]
    assert to_str(y) == "0?1"
    assert erasure_count(ternary("??0?")) == 3


def test_fill_complementary():
    y = ternary("0?1")
    stream = WordStream.from_seed(1)
    y1, y2 = fill_erasures(y, stream)
    assert y1[0] == y2[0] == 0 and y1[2] == y2[2] == 1
    assert y1[1] != y2[1]


def test_fill_weight_and_determinism():
    y = ternary("1?0??1")
    y1, y2 = fill_erasures(y, 7)
    assert np.count_nonzero(y1 ^ y2) == 3
    z1, z2 = fill_erasures(y, 7)
    assert np.array_equal(y1, z1) and np.array_equal(y2, z2)


def test_fill_requires_erasures():
    with pytest.raises(NoErasures):
        fill_erasures(ternary("0110"), 0)


def test_fill_is_uniform():
    y = ternary("?" * 8)
    stream = WordStream.from_seed(3)
    ones = sum(fill_erasures(y, stream)[0].sum() for _ in range(2000))
    assert abs(ones / 16000 - 0.5) < 0.02


def test_dh_unerased():
    assert dh_unerased(ternary("????"), np.array([1, 0, 1, 1])) == 0
    assert dh_unerased(ternary("0110"), np.array([0, 1, 1, 0])) == 0
    assert dh_unerased(ternary("0?10"), np.array([1, 1, 1, 1])) == 2
    with pytest.raises(LengthMismatch):
        dh_unerased(ternary("01"), np.array([0, 1, 1]))


def test_too_many_erasures_not_decoded(bch15, rng):
    c, y = corrupt(bch15, rng, 0, 5)
    r = eaed_decode(bch15, y, 0)
    assert r.outcome is Outcome.NO_DECODE
    assert np.array_equal(r.word, y) and not r.changed


def test_clean_codeword(bch15, rng):
    c = encode(bch15, rng.integers(0, 2, 7))
    r = eaed_decode(bch15, c, 0)
    assert r.outcome is Outcome.DECODED and not r.changed
    assert np.array_equal(r.word, c)


def test_one_error_two_erasures_always_corrected(bch15, rng):
    stream = WordStream.from_seed(11)
    for _ in range(10_000):
        c, y = corrupt(bch15, rng, 1, 2)
        r = eaed_decode(bch15, y, stream)
        assert r.decoded and np.array_equal(r.word, c)


def test_outside_sphere_sometimes_lucky(bch15, rng):
    stream = WordStream.from_seed(12)
    ok = 0
    trials = 10_000
    for _ in range(trials):
        c, y = corrupt(bch15, rng, 2, 1)
        r = eaed_decode(bch15, y, stream)
        ok += r.decoded and np.array_equal(r.word, c)
    assert 0 < ok < trials


@pytest.mark.parametrize("code_fixture", ["bch15", "even15", "even127"])
def test_kernel_matches_reference(code_fixture, request, rng):
    code = request.getfixturevalue(code_fixture)
    s1, s2 = WordStream.from_seed(5), WordStream.from_seed(5)
    for _ in range(3000):
        e = int(rng.integers(0, 4))
        E = int(rng.integers(0, code.d_des + 1))
        _, y = corrupt(code, rng, e, E)
        a = eaed_decode(code, y, s1)
        b = eaed_reference(code, y, s2)
        assert a.outcome is b.outcome
        assert np.array_equal(a.word, b.word)
        assert a.changed == b.changed
    assert np.array_equal(s1.state, s2.state)


def test_output_discipline(even15, rng):
    stream = WordStream.from_seed(9)
    for _ in range(5000):
        _, y = corrupt(even15, rng, int(rng.integers(0, 4)), int(rng.integers(0, 7)))
        r = eaed_decode(even15, y, stream)
        if r.decoded:
            assert erasure_count(r.word) == 0 and is_codeword(even15, r.word)
        else:
            assert np.array_equal(r.word, y)


def test_no_erasure_shortcut_equals_bdd(bch15, rng):
    for _ in range(2000):
        y = rng.integers(0, 2, 15).astype(np.int8)
        r = eaed_decode(bch15, y, 0)
        b = bdd(bch15, y)
        assert r.decoded == b.success
        if b.success:
            assert np.array_equal(r.word, b.codeword)


def test_tie_break_deterministic(bch15, rng):
    words = [corrupt(bch15, rng, 2, 2)[1] for _ in range(500)]
    runs = []
    for _ in range(2):
        s = WordStream.from_seed(99)
        runs.append([eaed_decode(bch15, y, s).word.tolist() for y in words])
    assert runs[0] == runs[1]
