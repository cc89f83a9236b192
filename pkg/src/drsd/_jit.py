"""JIT switch for the hot kernels.

Set ``DRSD_NO_JIT=1`` to run every kernel as plain Python/numpy. The
fallback is also used when numba cannot be imported.
"""
import os

_DISABLED = os.environ.get("DRSD_NO_JIT", "").strip().lower() in ("1", "true", "yes")

try:
    import numba as _nb
except ImportError:  # pragma: no cover
    _nb = None

JIT_ENABLED = _nb is not None and not _DISABLED


def jit(fn):
    if JIT_ENABLED:
        return _nb.njit(cache=True, nogil=True)(fn)
    return fn


def backend() -> str:
    return f"numba {_nb.__version__}" if JIT_ENABLED else "python"


__all__ = ["jit", "JIT_ENABLED", "backend"]
