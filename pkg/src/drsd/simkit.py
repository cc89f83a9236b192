"""Monte Carlo BER estimation, threshold search and net coding gain.

Frame ``f`` of a run draws everything (payload, channel noise, decoder
stream) from ``default_rng([master_seed, f])``. Frames are simulated in
fixed batches and the stopping rule is applied frame by frame in index
order, so the result does not depend on how a batch is split across
workers. Because the noise is drawn as sigma times a standard normal, runs
with the same seed at different Eb/N0 or with different decoders see
common random numbers.
"""
from __future__ import annotations

import dataclasses
import logging
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import special, stats

from .channel import ChannelConfig, transmit
from .decoders import DecoderConfig, Variant, decode
from .errors import BracketError, DomainError, NonMonotoneWarning
from .product import ProductCodeSpec, pc_encode

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StopRule:
    """When to stop simulating one Eb/N0 point.

    Always: ``min_frame_errors`` frame errors or ``max_frames`` frames.
    With ``decide_target`` set (threshold probes), also stop once at least
    ``min_frames`` frames are in and the BER is clearly on one side of the
    target: the mean per-frame bit-error count lies more than ``z`` standard
    errors from the target, or no error was seen although the target would
    have produced ``zero_error_bits`` bit errors.
    """

    min_frame_errors: int = 50
    max_frames: int = 1_000_000
    batch_frames: int = 64
    decide_target: float | None = None
    z: float = 3.0
    min_frames: int = 200
    zero_error_bits: float = 100.0

    def deciding(self, target: float) -> "StopRule":
        return dataclasses.replace(self, decide_target=target)

    def first_stop(self, errs: np.ndarray, prior: tuple[int, int, int, float],
                   bits_per_frame: int) -> tuple[int, str] | None:
        """Index into ``errs`` (this batch) of the first frame after which the
        rule fires, given totals (frames, bit_errors, frame_errors, sum_sq)
        before the batch."""
        f0, b0, e0, q0 = prior
        frames = f0 + np.arange(1, errs.size + 1)
        ferr = e0 + np.cumsum(errs > 0)
        cond = ferr >= self.min_frame_errors
        reason = np.where(cond, 1, 0)
        if self.decide_target is not None:
            tau = self.decide_target * bits_per_frame
            bits = b0 + np.cumsum(errs)
            sq = q0 + np.cumsum(errs.astype(np.float64) ** 2)
            mean = bits / frames
            var = np.maximum(sq / frames - mean**2, 0.0) * frames / np.maximum(frames - 1, 1)
            se = np.sqrt(var / frames)
            enough = frames >= self.min_frames
            zero = (bits == 0) & (frames * tau >= self.zero_error_bits)
            clear = (bits > 0) & (np.abs(mean - tau) > self.z * se)
            decided = enough & (zero | clear) & ~cond
            reason = np.where(decided, 2, reason)
        idx = np.flatnonzero(reason)
        if idx.size == 0:
            return None
        i = int(idx[0])
        return i, "frame_errors" if reason[i] == 1 else "decided"


@dataclass
class BerPoint:
    ebn0_db: float
    frames: int
    payload_bits: int
    bit_errors: int
    frame_errors: int
    stop_reason: str

    @property
    def ber(self) -> float:
        return self.bit_errors / self.payload_bits if self.payload_bits else 0.0

    @property
    def fer(self) -> float:
        return self.frame_errors / self.frames if self.frames else 0.0

    def interval(self, confidence: float = 0.95) -> tuple[float, float]:
        """Clopper-Pearson interval on the bit error probability."""
        return binomial_interval(self.bit_errors, self.payload_bits, confidence)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ber"] = self.ber
        return d


@dataclass
class ThresholdResult:
    target_ber: float
    bracket: tuple[float, float]
    estimate_db: float
    probes: list[BerPoint] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "target_ber": self.target_ber,
            "bracket": list(self.bracket),
            "estimate_db": self.estimate_db,
            "probes": [p.as_dict() for p in self.probes],
            "warnings": list(self.warnings),
        }


def binomial_interval(k: int, n: int, confidence: float = 0.95) -> tuple[float, float]:
    if n == 0:
        return 0.0, 1.0
    a = 1.0 - confidence
    lo = 0.0 if k == 0 else float(stats.beta.ppf(a / 2, k, n - k + 1))
    hi = 1.0 if k == n else float(stats.beta.ppf(1 - a / 2, k + 1, n - k))
    return lo, hi


# ---- frame simulation ----------------------------------------------------


def simulate_frame(pc: ProductCodeSpec, dec: DecoderConfig, ebn0_db: float,
                   master_seed: int, index: int, all_zero: bool = False) -> int:
    """Simulate one frame; returns the number of payload bit errors."""
    rng = np.random.default_rng([master_seed, index])
    k = pc.k
    payload = rng.integers(0, 2, size=(k, k), dtype=np.int8)
    if all_zero:
        payload[:] = 0
    x = pc_encode(pc, payload)
    soft = transmit(x, ChannelConfig(ebn0_db, pc.rate), rng)
    report = decode(soft, pc, dec, rng, truth=x)
    rows, cols = pc.payload
    # residual erasures (value 2) never match a transmitted bit
    return int(np.count_nonzero(report.frame[rows, cols] != x[rows, cols]))


def _simulate_range(args) -> np.ndarray:
    pc, dec, ebn0_db, seed, start, stop, all_zero = args
    return np.array([simulate_frame(pc, dec, ebn0_db, seed, f, all_zero)
                     for f in range(start, stop)], dtype=np.int64)


class FrameRunner:
    """Evaluates frame ranges inline or on a process pool."""

    def __init__(self, workers: int = 1):
        self.workers = max(1, int(workers))
        self._pool = ProcessPoolExecutor(self.workers) if self.workers > 1 else None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def close(self):
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def run(self, pc, dec, ebn0_db, seed, start, stop, all_zero=False) -> np.ndarray:
        if self._pool is None:
            return _simulate_range((pc, dec, ebn0_db, seed, start, stop, all_zero))
        edges = np.linspace(start, stop, self.workers + 1).astype(int)
        jobs = [(pc, dec, ebn0_db, seed, int(a), int(b), all_zero)
                for a, b in zip(edges[:-1], edges[1:]) if b > a]
        return np.concatenate(list(self._pool.map(_simulate_range, jobs)))


def run_ber_point(pc: ProductCodeSpec, dec: DecoderConfig, chan: ChannelConfig,
                  stop: StopRule = StopRule(), workers: int | FrameRunner = 1,
                  all_zero: bool = False) -> BerPoint:
    """Simulate frames at ``chan.ebn0_db`` until ``stop`` is met.

    The master seed is ``chan.seed``. The channel's erasure threshold is not
    used here; the decoder config carries it.
    """
    runner = workers if isinstance(workers, FrameRunner) else FrameRunner(workers)
    try:
        bits_per_frame = pc.k**2
        frames = bit_errors = frame_errors = 0
        sum_sq = 0.0
        reason = "max_frames"
        while frames < stop.max_frames:
            n = min(stop.batch_frames, stop.max_frames - frames)
            errs = runner.run(pc, dec, chan.ebn0_db, chan.seed, frames, frames + n, all_zero)
            hit = stop.first_stop(errs, (frames, bit_errors, frame_errors, sum_sq), bits_per_frame)
            if hit is not None:
                errs = errs[: hit[0] + 1]
                reason = hit[1]
            frames += errs.size
            bit_errors += int(errs.sum())
            frame_errors += int(np.count_nonzero(errs))
            sum_sq += float(np.sum(errs.astype(np.float64) ** 2))
            if hit is not None:
                break
    finally:
        if runner is not workers:
            runner.close()
    pt = BerPoint(float(chan.ebn0_db), frames, frames * bits_per_frame,
                  bit_errors, frame_errors, reason)
    log.info("%s @ %.3f dB: BER %.3e (%d frames, %d frame errors)",
             dec.label(), pt.ebn0_db, pt.ber, pt.frames, pt.frame_errors)
    return pt


def threshold_search(pc: ProductCodeSpec, dec: DecoderConfig, target_ber: float,
                     bracket: tuple[float, float], resolution_db: float = 0.02,
                     stop: StopRule = StopRule(), seed: int | None = None,
                     workers: int | FrameRunner = 1) -> ThresholdResult:
    """Bisect Eb/N0 for the point where BER crosses ``target_ber``.

    The final estimate interpolates log(BER) linearly between the last
    probes above and below target, clipped to the final bracket. ``seed``
    defaults to ``dec.seed``; every probe reuses it.
    """
    lo, hi = map(float, bracket)
    seed = dec.seed if seed is None else seed
    if not lo < hi:
        raise BracketError(f"bracket ({lo}, {hi}) is empty")
    runner = workers if isinstance(workers, FrameRunner) else FrameRunner(workers)
    try:
        rule = stop if stop.decide_target is not None else stop.deciding(target_ber)

        def probe(x: float) -> BerPoint:
            return run_ber_point(pc, dec, ChannelConfig(x, pc.rate, dec.erasure_threshold, seed),
                                 rule, runner)

        p_lo = probe(lo)
        if p_lo.ber <= target_ber:
            raise BracketError(f"BER {p_lo.ber:.3e} at {lo} dB is not above target {target_ber:.1e}")
        p_hi = probe(hi)
        if p_hi.ber > target_ber:
            raise BracketError(f"BER {p_hi.ber:.3e} at {hi} dB is not below target {target_ber:.1e}")
        result = ThresholdResult(target_ber, (lo, hi), float("nan"), [p_lo, p_hi])
        while hi - lo > resolution_db:
            mid = 0.5 * (lo + hi)
            p = probe(mid)
            result.probes.append(p)
            if p.ber > p_lo.ber or p.ber < p_hi.ber:
                msg = f"non-monotone BER at {mid:.4f} dB ({p.ber:.3e} outside [{p_hi.ber:.3e}, {p_lo.ber:.3e}])"
                result.warnings.append(msg)
                warnings.warn(msg, NonMonotoneWarning, stacklevel=2)
            if p.ber > target_ber:
                lo, p_lo = mid, p
            else:
                hi, p_hi = mid, p
    finally:
        if runner is not workers:
            runner.close()
    result.bracket = (lo, hi)
    result.estimate_db = _interpolate(p_lo, p_hi, target_ber)
    return result


def _interpolate(p_lo: BerPoint, p_hi: BerPoint, target: float) -> float:
    lo, hi = p_lo.ebn0_db, p_hi.ebn0_db
    if p_hi.ber <= 0 or p_lo.ber <= p_hi.ber:
        return 0.5 * (lo + hi)
    a, b = math.log10(p_lo.ber), math.log10(p_hi.ber)
    x = lo + (a - math.log10(target)) / (a - b) * (hi - lo)
    return min(max(x, lo), hi)


# ---- net coding gain -----------------------------------------------------


def uncoded_ebn0_db(target_ber: float) -> float:
    """Eb/N0 at which uncoded BPSK reaches ``target_ber``: Q(sqrt(2 Eb/N0)) = p."""
    if not 0.0 < target_ber < 0.5:
        raise DomainError(f"target BER {target_ber} outside (0, 0.5)")
    q = -special.ndtri(target_ber)
    return 10.0 * math.log10(q * q / 2.0)


def ncg_db(threshold_ebn0_db: float, target_ber: float) -> float:
    """Net coding gain: uncoded Eb/N0 requirement minus the coded threshold.

    The coded threshold is already in Eb/N0, so the code rate is accounted
    for; no further rate term is applied.
    """
    return uncoded_ebn0_db(target_ber) - float(threshold_ebn0_db)


NCG_CONVENTION = "NCG = Eb/N0_uncoded_BPSK(target) - Eb/N0_coded_threshold (dB)"

