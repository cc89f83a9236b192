"""Product-code decoding with dynamic reliability scores.

Modules: ``galois`` (GF(2^nu) arithmetic), ``bch`` (component codes and
BDD), ``eaed`` (error-and-erasure decoding), ``product`` (product-code
frames), ``channel`` (BI-AWGN and quantization), ``drs`` (score register),
``decoders`` (iBDD, iterative EaED, DRSD, genie EaED), ``simkit`` (Monte
Carlo BER and thresholds) and ``cli``.
"""
from ._jit import JIT_ENABLED, backend

__version__ = "0.1.0"

__all__ = ["JIT_ENABLED", "backend", "__version__"]
