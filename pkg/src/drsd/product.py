"""Product codes: every row and every column is a component codeword.

Frames are row-major int8 (n, n) arrays. The k x k payload sits in the
block ``frame[n-k:, n-k:]`` because component encoding is systematic with
parity in the low positions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bch import ComponentCodeSpec, build_code, encode_many, is_codeword
from .errors import DimensionMismatch, LengthMismatch


@dataclass(frozen=True, eq=False)
class ProductCodeSpec:
    component: ComponentCodeSpec

    @property
    def n(self) -> int:
        return self.component.n

    @property
    def k(self) -> int:
        return self.component.k

    @property
    def rate(self) -> float:
        return self.k**2 / self.n**2

    @property
    def overhead(self) -> float:
        return 1.0 / self.rate - 1.0

    @property
    def payload(self) -> tuple[slice, slice]:
        r = self.n - self.k
        return slice(r, None), slice(r, None)

    @property
    def name(self) -> str:
        return f"{self.component.name}^2"


def product_code(nu: int, t: int, even_weight: bool = False) -> ProductCodeSpec:
    return ProductCodeSpec(build_code(nu, t, even_weight))


def pc_encode(spec: ProductCodeSpec, message) -> np.ndarray:
    m = np.asarray(message)
    k, n = spec.k, spec.n
    if m.shape != (k, k):
        raise DimensionMismatch(f"message shape {m.shape} != ({k}, {k})")
    frame = np.zeros((n, n), dtype=np.int8)
    frame[n - k:, :] = encode_many(spec.component, m)
    frame[:, :] = encode_many(spec.component, frame[n - k:, :].T).T
    return frame


def is_pc_codeword(spec: ProductCodeSpec, frame) -> bool:
    frame = np.asarray(frame)
    c = spec.component
    return all(is_codeword(c, frame[i]) for i in range(spec.n)) and all(
        is_codeword(c, np.ascontiguousarray(frame[:, j])) for j in range(spec.n)
    )


def _check_index(frame: np.ndarray, index: int) -> None:
    if not 0 <= index < frame.shape[0]:
        raise IndexError(f"index {index} out of range for n={frame.shape[0]}")


def row_view(frame: np.ndarray, index: int) -> np.ndarray:
    _check_index(frame, index)
    return frame[index, :]


def col_view(frame: np.ndarray, index: int) -> np.ndarray:
    """Strided view of column ``index``; writes through to ``frame``."""
    _check_index(frame, index)
    return frame[:, index]


def write_back(frame: np.ndarray, index: int, word, axis: int = 0) -> None:
    """Store ``word`` into row (axis 0) or column (axis 1) ``index``."""
    _check_index(frame, index)
    word = np.asarray(word)
    if word.shape != (frame.shape[0],):
        raise LengthMismatch(f"word length {word.shape} != {frame.shape[0]}")
    if axis == 0:
        frame[index, :] = word
    else:
        frame[:, index] = word
