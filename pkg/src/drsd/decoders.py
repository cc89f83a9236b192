"""Iterative product decoders: iBDD, plain iterative EaED, DRSD and the
genie-aided EaED benchmark.

One iteration is a pass over all rows followed by a pass over all columns,
decoding in place so that column decoding sees the row results. The hot
loop lives in :func:`drsd.kernels.run_iteration`; this module handles the
schedule, the anchor threshold and the stopping rules.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .bch import ComponentCodeSpec
from .channel import hard_decision, init_drs, quantize
from .drs import TA_BUMP_PERIOD, default_t_a
from .errors import ConfigMismatch, DimensionMismatch
from .kernels import ERASED
from .product import ProductCodeSpec
from .rng import as_stream


class Variant(str, enum.Enum):
    IBDD = "ibdd"
    ITER_EAED = "eaed"
    DRSD = "drsd"
    GENIE_EAED = "genie"


@dataclass(frozen=True)
class DecoderConfig:
    variant: Variant
    total_iterations: int = 20
    drsd_iterations: int | None = None
    initial_t_a: int | None = None
    erasure_threshold: float = 0.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.total_iterations < 1:
            raise ValueError("total_iterations must be >= 1")
        if self.drsd_iterations is not None and not 0 <= self.drsd_iterations <= self.total_iterations:
            raise ValueError("drsd_iterations must lie in [0, total_iterations]")
        if self.erasure_threshold < 0:
            raise ValueError("erasure_threshold must be >= 0")

    @property
    def scored_iterations(self) -> int:
        """Leading DRSD iterations; the rest run plain EaED (8+2, 16+4)."""
        if self.variant is not Variant.DRSD:
            return 0
        if self.drsd_iterations is not None:
            return self.drsd_iterations
        return self.total_iterations * 4 // 5

    def t_a_for(self, comp: ComponentCodeSpec) -> int:
        if self.initial_t_a is not None:
            return self.initial_t_a
        return default_t_a(comp.n, comp.t)

    def label(self) -> str:
        if self.variant is Variant.DRSD:
            return f"drsd{self.total_iterations}"
        return f"{self.variant.value}{self.total_iterations}"


@dataclass
class DecodeReport:
    frame: np.ndarray
    iterations_used: int
    counters: list[dict] = field(default_factory=list)
    converged: bool = False
    t_a: int | None = None
    scores: np.ndarray | None = field(default=None, repr=False)

    @property
    def residual_erasures(self) -> int:
        return int(np.count_nonzero(self.frame == ERASED))

    @property
    def hard_frame(self) -> np.ndarray:
        """Output frame with residual erasures emitted as 0."""
        out = self.frame.copy()
        out[out == ERASED] = 0
        return out


def _component(spec) -> ComponentCodeSpec:
    return spec.component if isinstance(spec, ProductCodeSpec) else spec


def _as_frame(frame, n: int) -> np.ndarray:
    f = np.array(frame, dtype=np.int8, order="C", copy=True)
    if f.shape != (n, n):
        raise DimensionMismatch(f"frame shape {f.shape} != ({n}, {n})")
    return f


_NO_SCORES = np.zeros((1, 1), dtype=np.int8)


class _Runner:
    """Binds a frame, code tables and random stream for repeated iterations."""

    def __init__(self, comp: ComponentCodeSpec, frame: np.ndarray, stream, truth=None):
        self.comp = comp
        self.frame = frame
        self.stream = stream
        self.truth = _NO_SCORES if truth is None else truth
        self.counts = np.zeros(kernels.N_COUNTERS, dtype=np.int64)
        self.log: list[dict] = []

    def step(self, phase: str, scores=None, t_a: int = kernels.SCORE_MAX) -> dict:
        c = self.comp
        ptab, exp, log = c.tables
        use_drs = scores is not None
        kernels.run_iteration(
            self.frame, scores if use_drs else _NO_SCORES, t_a, use_drs,
            self.truth, self.truth is not _NO_SCORES,
            ptab, exp, log, c.n, c.t, c.even_weight, c.d_des, self.stream.state, self.counts,
        )
        rec = {
            "phase": phase,
            "accepted": int(self.counts[kernels.C_ACCEPTED]),
            "rejected": int(self.counts[kernels.C_REJECTED]),
            "failed": int(self.counts[kernels.C_FAILED]),
            "clean": int(self.counts[kernels.C_CLEAN]),
            "changed": bool(self.counts[kernels.C_CHANGED]),
        }
        if use_drs:
            rec["t_a"] = t_a
        self.log.append(rec)
        return rec

    def all_clean(self, rec: dict) -> bool:
        return rec["clean"] == 2 * self.comp.n


def _plain_loop(runner: _Runner, iters: int, phase: str) -> bool:
    """Unscored iterations; stops once an iteration changes nothing on an
    erasure-free frame (no randomness left, so it is a fixed point)."""
    for _ in range(iters):
        rec = runner.step(phase)
        if runner.all_clean(rec):
            return True
        if not rec["changed"] and kernels.count_erasures(runner.frame) == 0:
            break
    return False


def decode_ibdd(frame, spec, iters: int) -> DecodeReport:
    comp = _component(spec)
    f = _as_frame(frame, comp.n)
    if np.any(f == ERASED):
        raise ValueError("iBDD input must be erasure-free")
    runner = _Runner(comp, f, as_stream(0))
    converged = _plain_loop(runner, iters, "ibdd")
    return DecodeReport(f, len(runner.log), runner.log, converged)


def decode_iter_eaed(frame, spec, iters: int, rng) -> DecodeReport:
    comp = _component(spec)
    f = _as_frame(frame, comp.n)
    runner = _Runner(comp, f, as_stream(rng))
    converged = _plain_loop(runner, iters, "eaed")
    return DecodeReport(f, len(runner.log), runner.log, converged)


def decode_genie_eaed(frame, truth, spec, iters: int, rng) -> DecodeReport:
    comp = _component(spec)
    f = _as_frame(frame, comp.n)
    truth = _as_frame(truth, comp.n)
    runner = _Runner(comp, f, as_stream(rng), truth=truth)
    converged = _plain_loop(runner, iters, "genie")
    return DecodeReport(f, len(runner.log), runner.log, converged)


def decode_drsd(soft, spec, cfg: DecoderConfig, rng) -> DecodeReport:
    if cfg.variant is not Variant.DRSD:
        raise ConfigMismatch(f"decode_drsd needs a DRSD config, got {cfg.variant.value}")
    comp = _component(spec)
    soft = np.asarray(soft, dtype=np.float64)
    if soft.shape != (comp.n, comp.n):
        raise DimensionMismatch(f"soft frame shape {soft.shape} != ({comp.n}, {comp.n})")

    scores = init_drs(soft)
    frame = quantize(soft, cfg.erasure_threshold)
    t_a = cfg.t_a_for(comp)
    runner = _Runner(comp, frame, as_stream(rng))

    converged = False
    for it in range(1, cfg.scored_iterations + 1):
        rec = runner.step("drsd", scores, t_a)
        if runner.all_clean(rec):
            converged = True
            break
        if it % TA_BUMP_PERIOD == 0:
            t_a += 1
    if not converged:
        trailing = cfg.total_iterations - cfg.scored_iterations
        converged = _plain_loop(runner, trailing, "eaed")
    return DecodeReport(frame, len(runner.log), runner.log, converged, t_a, scores)


def decode(soft, spec, cfg: DecoderConfig, rng, truth=None) -> DecodeReport:
    """Run the decoder named by ``cfg`` on a soft channel frame."""
    v = cfg.variant
    if v is Variant.DRSD:
        return decode_drsd(soft, spec, cfg, rng)
    if v is Variant.IBDD:
        return decode_ibdd(hard_decision(soft), spec, cfg.total_iterations)
    frame = quantize(soft, cfg.erasure_threshold)
    if v is Variant.ITER_EAED:
        return decode_iter_eaed(frame, spec, cfg.total_iterations, rng)
    if truth is None:
        raise ValueError("genie decoding needs the transmitted frame")
    return decode_genie_eaed(frame, truth, spec, cfg.total_iterations, rng)
