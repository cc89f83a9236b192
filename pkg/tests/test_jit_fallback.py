"""The pure-Python kernel path must reproduce the numba path exactly."""
import json
import os
import subprocess
import sys

import pytest

from drsd import _jit

WORKLOAD = r"""
import hashlib, json
import numpy as np
from drsd._jit import backend
from drsd.bch import bdd, build_code
from drsd.channel import ChannelConfig, transmit
from drsd.decoders import DecoderConfig, decode
from drsd.eaed import eaed_decode
from drsd.kernels import ERASED
from drsd.product import ProductCodeSpec, pc_encode
from drsd.rng import WordStream

out = {"backend": backend(), "bdd": [], "eaed": [], "frames": []}
rng = np.random.default_rng(99)
for code in (build_code(4, 2), build_code(4, 2, even_weight=True), build_code(5, 3)):
    for _ in range(200):
        w = rng.integers(0, 2, code.n).astype(np.int8)
        r = bdd(code, w)
        out["bdd"].append(list(r.flips) if r.success else None)
        y = w.copy()
        y[rng.choice(code.n, int(rng.integers(0, code.d_des + 1)), replace=False)] = ERASED
        e = eaed_decode(code, y, WordStream.from_generator(rng))
        out["eaed"].append([e.outcome.name, e.word.tolist()])
pc = ProductCodeSpec(build_code(5, 2, even_weight=True))
for v in ("ibdd", "eaed", "drsd", "genie"):
    dec = DecoderConfig(v, 10, erasure_threshold=0.25)
    for f in range(4):
        g = np.random.default_rng([7, f])
        x = pc_encode(pc, g.integers(0, 2, (pc.k, pc.k)))
        soft = transmit(x, ChannelConfig(2.6, pc.rate), g)
        rep = decode(soft, pc, dec, g, truth=x)
        digest = hashlib.sha256(rep.frame.tobytes()).hexdigest()
        sc = None if rep.scores is None else hashlib.sha256(rep.scores.tobytes()).hexdigest()
        out["frames"].append([v, digest, sc, rep.counters])
print(json.dumps(out))
"""


def run_workload(no_jit: bool) -> dict:
    env = dict(os.environ)
    env["DRSD_NO_JIT"] = "1" if no_jit else "0"
    r = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True,
                       text=True, timeout=900)
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


@pytest.mark.skipif(not _jit.JIT_ENABLED, reason="numba path not available")
def test_fallback_matches_numba():
    fast = run_workload(False)
    slow = run_workload(True)
    assert fast["backend"].startswith("numba") and slow["backend"] == "python"
    assert fast["bdd"] == slow["bdd"]
    assert fast["eaed"] == slow["eaed"]
    assert fast["frames"] == slow["frames"]
    # the workload exercises every decoder outcome class
    assert any(b is None for b in fast["bdd"]) and any(b for b in fast["bdd"])
    assert {o for o, _ in fast["eaed"]} == {"DECODED", "NO_DECODE", "BOTH_FAILED"}
