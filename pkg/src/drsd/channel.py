"""BI-AWGN transmission, ternary quantization and DRS initialization."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import ERASED

DRS_GROUPS = 16
DRS_INIT_LOW = 9


@dataclass(frozen=True)
class ChannelConfig:
    ebn0_db: float
    rate: float
    erasure_threshold: float = 0.0
    seed: int = 0

    @property
    def sigma2(self) -> float:
        return noise_variance(self.ebn0_db, self.rate)

    @property
    def sigma(self) -> float:
        return float(np.sqrt(self.sigma2))


def noise_variance(ebn0_db: float, rate: float) -> float:
    """sigma^2 = 1 / (2 r Eb/N0) for unit-energy BPSK."""
    return 1.0 / (2.0 * rate * 10.0 ** (ebn0_db / 10.0))


def bpsk(frame) -> np.ndarray:
    """Map bit 0 to +1 and bit 1 to -1."""
    return 1.0 - 2.0 * np.asarray(frame, dtype=np.float64)


def transmit(frame, cfg: ChannelConfig, rng: np.random.Generator) -> np.ndarray:
    x = bpsk(frame)
    return x + cfg.sigma * rng.standard_normal(x.shape)


def quantize(soft, threshold: float) -> np.ndarray:
    """|y| <= T becomes ERASED; otherwise 0 for y > T, 1 for y < -T."""
    if threshold < 0:
        raise ValueError("erasure threshold must be nonnegative")
    soft = np.asarray(soft)
    out = (soft < 0).astype(np.int8)
    out[np.abs(soft) <= threshold] = ERASED
    return out


def hard_decision(soft) -> np.ndarray:
    """Sign decision with no erasures (ties at exactly 0 go to bit 0)."""
    return (np.asarray(soft) < 0).astype(np.int8)


def init_drs(soft, groups: int = DRS_GROUPS, low: int = DRS_INIT_LOW) -> np.ndarray:
    """Initial reliability scores from soft magnitudes.

    Magnitudes are stable-sorted ascending and cut into ``groups`` groups of
    ceil(N/groups) entries (the last one may be short); group g gets score
    ``low + g``. Ties keep position order.
    """
    soft = np.asarray(soft)
    mag = np.abs(soft).ravel()
    size = -(-mag.size // groups)
    order = np.argsort(mag, kind="stable")
    scores = np.empty(mag.size, dtype=np.int8)
    scores[order] = low + np.arange(mag.size) // size
    return scores.reshape(soft.shape)
