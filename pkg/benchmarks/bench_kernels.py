"""Numba kernels versus the DRSD_NO_JIT=1 pure-Python fallback.

Each backend runs in its own interpreter (the switch is read at import).
Reported times are per call after one warm-up call, so numba compile time
is excluded and shown separately.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
import numpy as np
t0 = time.perf_counter()
from drsd._jit import backend
from drsd.bch import bdd, build_code
from drsd.channel import ChannelConfig, transmit
from drsd.decoders import DecoderConfig, decode
from drsd.product import ProductCodeSpec, pc_encode

repeat, slow = int(sys.argv[1]), sys.argv[2] == "1"
res = {"backend": backend()}

def timed(fn, n):
    fn()
    t = time.perf_counter()
    for _ in range(n):
        fn()
    return (time.perf_counter() - t) / n

t = time.perf_counter()
code = build_code(7, 2, even_weight=True)
rng = np.random.default_rng(0)
words = rng.integers(0, 2, (64, code.n)).astype(np.int8)
bdd(code, words[0])
res["first_call_s"] = time.perf_counter() - t
res["bdd_127_us"] = 1e6 * timed(lambda: [bdd(code, w) for w in words], repeat) / len(words)

for nu, ebn0 in ((5, 3.0), (7, 3.6)):
    pc = ProductCodeSpec(build_code(nu, 2, even_weight=True))
    g = np.random.default_rng(1)
    x = pc_encode(pc, g.integers(0, 2, (pc.k, pc.k)))
    soft = transmit(x, ChannelConfig(ebn0, pc.rate), g)
    n = 1 if (slow and nu == 7) else repeat
    for v in ("ibdd", "drsd"):
        dec = DecoderConfig(v, 20, erasure_threshold=0.14)
        res[f"{v}_{pc.n}_ms"] = 1e3 * timed(lambda: decode(soft, pc, dec, 3), n)
print(json.dumps(res))
"""


def run(no_jit: bool, repeat: int) -> dict:
    env = dict(os.environ, DRSD_NO_JIT="1" if no_jit else "0")
    r = subprocess.run([sys.executable, "-c", CHILD, str(repeat), "1" if no_jit else "0"],
                       env=env, capture_output=True, text=True, check=True)
    return json.loads(r.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", default=None)
    a = ap.parse_args()
    fast = run(False, a.repeat)
    slow = run(True, a.repeat)
    keys = [k for k in fast if k != "backend"]
    print(f"{'metric':<16}{fast['backend']:>16}{slow['backend']:>16}{'speedup':>10}")
    for k in keys:
        ratio = "-" if k == "first_call_s" else f"{slow[k] / fast[k]:.1f}"
        print(f"{k:<16}{fast[k]:>16.3f}{slow[k]:>16.3f}{ratio:>10}")
    if a.json:
        with open(a.json, "w") as fh:
            json.dump({"numba": fast, "python": slow}, fh, indent=2)


if __name__ == "__main__":
    main()
