"""Hot loops: BCH syndromes, Berlekamp-Massey + Chien BDD, EaED, and one
full row/column iteration of the product decoders.

Every function here is compiled by numba unless ``DRSD_NO_JIT=1``, in
which case the identical source runs as plain Python. Keep the code
numba-friendly: scalar loops, preallocated int arrays, no Python objects.

Word encoding: int8 arrays with 0, 1 and ERASED (2). Field tables: ``exp``
has length 2n (alpha^i for 0 <= i < 2n) so products need no modulo, and
``log[0]`` is unused.
"""
import numpy as np

from ._jit import jit

ERASED = 2

# eaed status codes
NO_DECODE = 0
BOTH_FAILED = 1
DECODED = 2

# per-iteration counter slots
C_ACCEPTED = 0
C_REJECTED = 1
C_FAILED = 2
C_CLEAN = 3
C_CHANGED = 4
N_COUNTERS = 5

SCORE_MAX = 31

_M32 = 0xFFFFFFFF


@jit
def rng_next(state):
    """xoshiro128** step on a 4-word state held in an int64 array."""
    s0 = state[0]
    s1 = state[1]
    s2 = state[2]
    s3 = state[3]
    x = (s1 * 5) & _M32
    result = ((((x << 7) | (x >> 25)) & _M32) * 9) & _M32
    t = (s1 << 9) & _M32
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = ((s3 << 11) | (s3 >> 21)) & _M32
    state[0] = s0
    state[1] = s1
    state[2] = s2
    state[3] = s3
    return result


@jit
def gmul(exp, log, a, b):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@jit
def syndromes(word, ptab, exp, log, n, t, out):
    """S_1..S_2t of a binary word into ``out``; returns True if all are zero.

    ``ptab[j, i] = alpha^((2j+1) i)``; odd syndromes are computed directly
    (branch-free masked XOR), even ones by squaring.
    """
    allzero = True
    for j in range(t):
        s = 0
        for i in range(n):
            s ^= ptab[j, i] & -np.int64(word[i])
        out[2 * j] = s
        if s != 0:
            allzero = False
    for j in range(2, 2 * t + 1, 2):
        h = out[j // 2 - 1]
        out[j - 1] = 0 if h == 0 else exp[2 * log[h]]
    return allzero


@jit
def parity(word, n):
    p = 0
    for i in range(n):
        p ^= word[i]
    return p & 1


@jit
def is_codeword(word, ptab, exp, log, n, t, even, synd):
    for i in range(n):
        if word[i] == ERASED:
            return False
    if not syndromes(word, ptab, exp, log, n, t, synd):
        return False
    return not (even and parity(word, n) != 0)


@jit
def locate(synd, par, exp, log, n, t, even, lam, bb, tmp, pos):
    """Berlekamp-Massey + Chien search from precomputed syndromes.

    ``par`` is the overall parity of the word (used for even-weight codes).
    Writes error positions into ``pos`` and returns their count, or -1.
    """
    nt = 2 * t
    for i in range(nt + 1):
        lam[i] = 0
        bb[i] = 0
    lam[0] = 1
    bb[0] = 1
    L = 0
    m = 1
    b = 1
    for r in range(nt):
        d = synd[r]
        for i in range(1, L + 1):
            d ^= gmul(exp, log, lam[i], synd[r - i])
        if d == 0:
            m += 1
            continue
        coef = exp[log[d] + n - log[b]]
        if 2 * L <= r:
            for i in range(nt + 1):
                tmp[i] = lam[i]
            for i in range(m, nt + 1):
                lam[i] ^= gmul(exp, log, coef, bb[i - m])
            L = r + 1 - L
            for i in range(nt + 1):
                bb[i] = tmp[i]
            b = d
            m = 1
        else:
            for i in range(m, nt + 1):
                lam[i] ^= gmul(exp, log, coef, bb[i - m])
            m += 1
    if L > t:
        return -1
    for i in range(L + 1, nt + 1):
        if lam[i] != 0:
            return -1
    if even and (par ^ (L & 1)) != 0:
        return -1

    # Chien search: position i is in error iff lam(alpha^-i) = 0.
    # tmp[j] tracks log(lam_j) - i*j mod n as i advances.
    for j in range(1, L + 1):
        tmp[j] = log[lam[j]] if lam[j] != 0 else -1
    count = 0
    for i in range(n):
        v = 1
        for j in range(1, L + 1):
            e = tmp[j]
            if e >= 0:
                v ^= exp[e]
                e -= j
                if e < 0:
                    e += n
                tmp[j] = e
        if v == 0:
            pos[count] = i
            count += 1
            if count == L:
                break
    if count != L:
        return -1
    return L


@jit
def bdd(word, ptab, exp, log, n, t, even, synd, lam, bb, tmp, pos):
    """Bounded-distance decode a binary word.

    Writes error positions into ``pos`` and returns their count, or -1 on
    failure. ``word`` is not modified. Scratch arrays: ``synd`` (2t),
    ``lam``/``bb``/``tmp`` (2t+1), ``pos`` (>= t).
    """
    allzero = syndromes(word, ptab, exp, log, n, t, synd)
    par = parity(word, n) if even else 0
    if allzero:
        return 0 if par == 0 else -1
    return locate(synd, par, exp, log, n, t, even, lam, bb, tmp, pos)


@jit
def dh_unerased(y, c, n):
    d = 0
    for i in range(n):
        if y[i] != ERASED and y[i] != c[i]:
            d += 1
    return d


@jit
def fill_erasures(y, n, state, y1, y2):
    """Complementary random fill of the erased positions; returns E(y)."""
    r = 0
    nbits = 32
    e = 0
    for i in range(n):
        v = y[i]
        if v == ERASED:
            if nbits == 32:
                r = rng_next(state)
                nbits = 0
            f = (r >> nbits) & 1
            nbits += 1
            y1[i] = f
            y2[i] = 1 - f
            e += 1
        else:
            y1[i] = v
            y2[i] = v
    return e


@jit
def eaed(y, ptab, exp, log, n, t, even, ddes, state, out,
         y1, y2, pos1, pos2, synd, lam, bb, tmp):
    """Error-and-erasure decode ``y`` into ``out``; returns a status code.

    On NO_DECODE / BOTH_FAILED ``out`` is left untouched.
    """
    e = 0
    for i in range(n):
        if y[i] == ERASED:
            e += 1
    if e >= ddes:
        return NO_DECODE
    if e == 0:
        k = bdd(y, ptab, exp, log, n, t, even, synd, lam, bb, tmp, pos1)
        if k < 0:
            return BOTH_FAILED
        for i in range(n):
            out[i] = y[i]
        for i in range(k):
            out[pos1[i]] ^= 1
        return DECODED

    fill_erasures(y, n, state, y1, y2)
    k1 = bdd(y1, ptab, exp, log, n, t, even, synd, lam, bb, tmp, pos1)
    k2 = bdd(y2, ptab, exp, log, n, t, even, synd, lam, bb, tmp, pos2)
    if k1 < 0 and k2 < 0:
        return BOTH_FAILED
    for i in range(k1):
        y1[pos1[i]] ^= 1
    for i in range(k2):
        y2[pos2[i]] ^= 1
    pick_first = True
    if k1 < 0:
        pick_first = False
    elif k2 >= 0:
        d1 = dh_unerased(y, y1, n)
        d2 = dh_unerased(y, y2, n)
        if d1 > d2:
            pick_first = False
        elif d1 == d2:
            pick_first = (rng_next(state) >> 31) == 0
    if pick_first:
        for i in range(n):
            out[i] = y1[i]
    else:
        for i in range(n):
            out[i] = y2[i]
    return DECODED


@jit
def run_iteration(frame, scores, t_a, use_drs, truth, use_genie,
                  ptab, exp, log, n, t, even, ddes, state, counts):
    """One full iteration (all rows, then all columns) over ``frame`` in place.

    ``use_drs`` enables anchor protection and score feedback on ``scores``;
    ``use_genie`` discards every decision that disagrees with ``truth``.
    ``counts`` receives accepted/rejected/failed/clean/changed tallies.
    """
    for c in range(N_COUNTERS):
        counts[c] = 0
    nt = 2 * t
    y = np.empty(n, np.int8)
    out = np.empty(n, np.int8)
    y1 = np.empty(n, np.int8)
    y2 = np.empty(n, np.int8)
    pos1 = np.empty(nt + 1, np.int64)
    pos2 = np.empty(nt + 1, np.int64)
    synd = np.empty(nt, np.int64)
    lam = np.empty(nt + 1, np.int64)
    bb = np.empty(nt + 1, np.int64)
    tmp = np.empty(nt + 1, np.int64)

    for axis in range(2):
        for line in range(n):
            if axis == 0:
                for i in range(n):
                    y[i] = frame[line, i]
            else:
                for i in range(n):
                    y[i] = frame[i, line]

            e = 0
            for i in range(n):
                if y[i] == ERASED:
                    e += 1
            if e == 0:
                # erasure-free: the codeword check and BDD share syndromes
                allzero = syndromes(y, ptab, exp, log, n, t, synd)
                par = parity(y, n) if even else 0
                if allzero and par == 0:
                    counts[C_CLEAN] += 1
                    if use_drs:
                        for i in range(n):
                            if axis == 0:
                                if scores[line, i] < SCORE_MAX:
                                    scores[line, i] += 1
                            else:
                                if scores[i, line] < SCORE_MAX:
                                    scores[i, line] += 1
                    continue
                k = -1 if allzero else locate(synd, par, exp, log, n, t, even,
                                              lam, bb, tmp, pos1)
                if k < 0:
                    counts[C_FAILED] += 1
                    continue
                for i in range(n):
                    out[i] = y[i]
                for i in range(k):
                    out[pos1[i]] ^= 1
            else:
                st = eaed(y, ptab, exp, log, n, t, even, ddes, state, out,
                          y1, y2, pos1, pos2, synd, lam, bb, tmp)
                if st != DECODED:
                    counts[C_FAILED] += 1
                    continue

            if use_genie:
                wrong = False
                for i in range(n):
                    tv = truth[line, i] if axis == 0 else truth[i, line]
                    if out[i] != tv:
                        wrong = True
                        break
                if wrong:
                    counts[C_REJECTED] += 1
                    continue

            if use_drs:
                conflict = False
                for i in range(n):
                    if y[i] != ERASED and out[i] != y[i]:
                        if axis == 0:
                            if scores[line, i] > t_a:
                                conflict = True
                                scores[line, i] -= 1
                        else:
                            if scores[i, line] > t_a:
                                conflict = True
                                scores[i, line] -= 1
                if conflict:
                    counts[C_REJECTED] += 1
                    continue

            for i in range(n):
                if out[i] != y[i]:
                    if axis == 0:
                        frame[line, i] = out[i]
                        if use_drs and y[i] != ERASED and scores[line, i] > 0:
                            scores[line, i] -= 1
                    else:
                        frame[i, line] = out[i]
                        if use_drs and y[i] != ERASED and scores[i, line] > 0:
                            scores[i, line] -= 1
                    counts[C_CHANGED] = 1
            counts[C_ACCEPTED] += 1


@jit
def count_erasures(frame):
    e = 0
    for v in frame.ravel():
        if v == ERASED:
            e += 1
    return e
