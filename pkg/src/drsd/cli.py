"""Command-line front end.

Subcommands: ``ber`` (BER over an Eb/N0 grid), ``threshold`` (noise
thresholds at a target BER, gains against a baseline), ``sweep-T``
(threshold versus erasure threshold T), ``ncg``, ``run CONFIG`` (the same
experiments from an INI file) and ``selftest``.

Exit codes: 0 success, 1 configuration error, 2 runtime error, 3 selftest
failure.
"""
from __future__ import annotations

import argparse
import configparser
import csv
import dataclasses
import io
import json
import logging
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import defaults, selftest
from ._jit import backend
from .bch import ComponentCodeSpec, build_code
from .channel import ChannelConfig
from .decoders import DecoderConfig, Variant
from .errors import DrsdError
from .product import ProductCodeSpec
from .simkit import (
    NCG_CONVENTION,
    BerPoint,
    FrameRunner,
    StopRule,
    ThresholdResult,
    ncg_db,
    run_ber_point,
    threshold_search,
    uncoded_ebn0_db,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2
EXIT_SELFTEST = 3

MODES = ("ber", "threshold", "sweep-T")

log = logging.getLogger("drsd")


class ConfigError(Exception):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source is not None:
            where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.line = line


# ---- value parsing -------------------------------------------------------


def parse_code(text: str) -> ComponentCodeSpec:
    """``"127,2,even"`` / ``"127,2"`` / ``"255,3,bch"`` to a component code."""
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) not in (2, 3):
        raise ConfigError(f"code {text!r}: expected n,t[,even|bch]")
    try:
        n, t = int(parts[0]), int(parts[1])
    except ValueError:
        raise ConfigError(f"code {text!r}: n and t must be integers") from None
    kind = parts[2].lower() if len(parts) == 3 else "bch"
    if kind not in ("even", "bch"):
        raise ConfigError(f"code {text!r}: kind must be 'even' or 'bch'")
    nu = (n + 1).bit_length() - 1
    if n + 1 != 1 << nu or not 3 <= nu <= 10:
        raise ConfigError(f"code {text!r}: n must be 2^nu - 1 with 3 <= nu <= 10")
    try:
        return build_code(nu, t, kind == "even")
    except DrsdError as exc:
        raise ConfigError(f"code {text!r}: {exc}") from None


def parse_grid(text: str) -> list[float]:
    """``"3.0:0.25:5.0"`` (inclusive) or a comma list."""
    text = str(text).strip()
    try:
        if ":" in text:
            a, step, b = (float(v) for v in text.split(":"))
            if step <= 0 or b < a:
                raise ValueError
            count = int(np.floor((b - a) / step + 1e-9)) + 1
            return [round(a + i * step, 10) for i in range(count)]
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"grid {text!r}: expected start:step:stop or a comma list") from None


def parse_pair(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in re.split(r"[:,]", str(text)))
    except ValueError:
        raise ConfigError(f"bracket {text!r}: expected lo:hi") from None
    return lo, hi


def parse_T_values(text: str, base: float | None) -> list[float]:
    """Comma list of absolute values or multiples of the tuned T (``0.9x``)."""
    out = []
    for tok in str(text).split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            if tok.endswith("x"):
                if base is None:
                    raise ConfigError(f"relative T value {tok!r} needs a tuned or explicit T")
                out.append(round(float(tok[:-1]) * base, 6))
            else:
                out.append(float(tok))
        except ValueError:
            raise ConfigError(f"T value {tok!r} is not a number") from None
    if not out:
        raise ConfigError("empty T value list")
    return out


def parse_decoder(text: str, default_iters: int) -> tuple[Variant, int]:
    """``drsd`` or ``drsd:10``."""
    name, _, iters = str(text).strip().partition(":")
    try:
        v = Variant(name.lower())
    except ValueError:
        choices = ", ".join(x.value for x in Variant)
        raise ConfigError(f"decoder {name!r}: choose from {choices}") from None
    try:
        return v, int(iters) if iters else default_iters
    except ValueError:
        raise ConfigError(f"decoder {text!r}: iteration count must be an integer") from None


# ---- experiment config ---------------------------------------------------


@dataclass
class ExperimentConfig:
    code: str
    decoders: list[str]
    mode: str = "ber"
    iters: int = 20
    drsd_iters: int | None = None
    T: float | None = None
    t_a: int | None = None
    ebn0: str = "3.0:0.25:5.0"
    target_ber: float = 1e-4
    bracket: str = "3.0:5.0"
    resolution_db: float = 0.02
    T_values: str = "0.9x,1.0x,1.1x"
    seed: int = 1
    workers: int = 1
    min_frame_errors: int = 50
    max_frames: int = 1_000_000
    baseline: str | None = None
    ncg_thresholds: list[float] = field(default_factory=list)
    ncg_target: float = 1e-15
    out: str | None = None

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"mode {self.mode!r}: choose from {', '.join(MODES)}")
        if not self.decoders:
            raise ConfigError("at least one decoder is required")
        if self.iters < 1 or self.workers < 1 or self.min_frame_errors < 1 or self.max_frames < 1:
            raise ConfigError("iters, workers, min_frame_errors and max_frames must be positive")
        if not 0 < self.target_ber < 0.5:
            raise ConfigError(f"target_ber {self.target_ber} outside (0, 0.5)")
        if self.T is not None and self.T < 0:
            raise ConfigError("T must be nonnegative")
        if self.baseline is not None and self.baseline not in self.decoders:
            raise ConfigError(f"baseline {self.baseline!r} is not one of the decoders {self.decoders}")

    def stop_rule(self) -> StopRule:
        return StopRule(self.min_frame_errors, self.max_frames)


@dataclass
class Resolved:
    """Objects built from an ExperimentConfig."""

    pc: ProductCodeSpec
    decoders: dict[str, DecoderConfig]

    def describe(self) -> dict:
        return {name: {**dataclasses.asdict(d), "variant": d.variant.value}
                for name, d in self.decoders.items()}


def tuned_T(comp: ComponentCodeSpec) -> float | None:
    try:
        return defaults.erasure_threshold(comp)
    except KeyError:
        return None


def resolve(cfg: ExperimentConfig, T_override: float | None = None) -> Resolved:
    comp = parse_code(cfg.code)
    decs = {}
    for name in cfg.decoders:
        variant, iters = parse_decoder(name, cfg.iters)
        T = T_override if T_override is not None else cfg.T
        if variant is Variant.IBDD:
            T = 0.0
        elif T is None:
            T = tuned_T(comp)
            if T is None:
                raise ConfigError(f"no tuned erasure threshold for {defaults.code_key(comp)}; pass T explicitly")
        drsd_iters = cfg.drsd_iters if variant is Variant.DRSD else None
        try:
            decs[name] = DecoderConfig(variant, iters, drsd_iters, cfg.t_a, T, cfg.seed)
        except ValueError as exc:
            raise ConfigError(f"decoder {name!r}: {exc}") from None
    return Resolved(ProductCodeSpec(comp), decs)


# ---- output --------------------------------------------------------------


def _metadata(command: str, cfg: ExperimentConfig, res: Resolved) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "seed": cfg.seed,
        "backend": backend(),
        "code": res.pc.name,
        "config": dataclasses.asdict(cfg),
        "decoders": res.describe(),
        "ncg_convention": NCG_CONVENTION,
    }


def write_output(path: str | None, meta: dict, rows: list[dict], extra: dict | None = None) -> None:
    """CSV (config in '#' header lines) or JSON, chosen by file suffix."""
    if path is None:
        return
    p = Path(path)
    if p.suffix.lower() == ".json":
        doc = dict(meta, results=rows)
        if extra:
            doc.update(extra)
        p.write_text(json.dumps(doc, indent=2, default=float) + "\n")
    else:
        buf = io.StringIO()
        buf.write(f"# schema_version: {SCHEMA_VERSION}\n")
        buf.write(f"# meta: {json.dumps(meta, default=float)}\n")
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        p.write_text(buf.getvalue())
    log.info("wrote %s", p)


def print_table(rows: list[dict], cols: list[str], out=None) -> None:
    out = out or sys.stdout
    cells = [[_fmt(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c) for i, c in enumerate(cols)]
    print("  ".join(c.rjust(w) for c, w in zip(cols, widths)), file=out)
    for row in cells:
        print("  ".join(v.rjust(w) for v, w in zip(row, widths)), file=out)


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.3e}" if v != 0 and (abs(v) < 1e-2 or abs(v) >= 1e4) else f"{v:.4f}"
    return str(v)


# ---- experiments ---------------------------------------------------------


def ber_rows(name: str, p: BerPoint) -> dict:
    lo, hi = p.interval()
    return {
        "decoder": name, "ebn0_db": p.ebn0_db, "frames": p.frames, "bits": p.payload_bits,
        "bit_errors": p.bit_errors, "frame_errors": p.frame_errors, "ber": p.ber,
        "ber_ci_low": lo, "ber_ci_high": hi, "stop_reason": p.stop_reason,
    }


def run_ber(cfg: ExperimentConfig, res: Resolved, runner: FrameRunner) -> tuple[list[dict], dict]:
    rows = []
    for name, dec in res.decoders.items():
        for x in parse_grid(cfg.ebn0):
            chan = ChannelConfig(x, res.pc.rate, dec.erasure_threshold, cfg.seed)
            rows.append(ber_rows(name, run_ber_point(res.pc, dec, chan, cfg.stop_rule(), runner)))
    print_table(rows, ["decoder", "ebn0_db", "frames", "bit_errors", "frame_errors", "ber", "stop_reason"])
    return rows, {}


def _threshold(cfg, res, dec, runner) -> ThresholdResult:
    return threshold_search(res.pc, dec, cfg.target_ber, parse_pair(cfg.bracket),
                            cfg.resolution_db, cfg.stop_rule(), cfg.seed, runner)


def run_threshold(cfg: ExperimentConfig, res: Resolved, runner: FrameRunner) -> tuple[list[dict], dict]:
    results = {name: _threshold(cfg, res, dec, runner) for name, dec in res.decoders.items()}
    base = cfg.baseline or (next((n for n in cfg.decoders if n.startswith("ibdd")), cfg.decoders[0]))
    rows = []
    for name, r in results.items():
        rows.append({
            "decoder": name, "target_ber": r.target_ber, "threshold_db": r.estimate_db,
            "bracket_lo": r.bracket[0], "bracket_hi": r.bracket[1],
            "gain_db": results[base].estimate_db - r.estimate_db,
            "ncg_at_target_db": ncg_db(r.estimate_db, r.target_ber),
            "probes": len(r.probes), "warnings": len(r.warnings),
        })
    print_table(rows, ["decoder", "threshold_db", "gain_db", "ncg_at_target_db", "probes", "warnings"])
    print(f"gains relative to {base}")
    extra = {"probes": {n: r.as_dict() for n, r in results.items()}}
    if cfg.ncg_thresholds:
        extra["ncg"] = print_ncg(cfg.ncg_thresholds, cfg.ncg_target)
    return rows, extra


def sweep_values(cfg: ExperimentConfig) -> list[float]:
    base = cfg.T if cfg.T is not None else tuned_T(parse_code(cfg.code))
    return parse_T_values(cfg.T_values, base)


def run_sweep(cfg: ExperimentConfig, res: Resolved, runner: FrameRunner,
              write_defaults: str | None = None) -> tuple[list[dict], dict]:
    comp = res.pc.component
    name, dec = next(iter(res.decoders.items()))
    rows = []
    for T in sweep_values(cfg):
        d = dataclasses.replace(dec, erasure_threshold=T)
        r = _threshold(cfg, res, d, runner)
        rows.append({"decoder": name, "T": T, "threshold_db": r.estimate_db,
                     "bracket_lo": r.bracket[0], "bracket_hi": r.bracket[1], "probes": len(r.probes)})
    best = min(rows, key=lambda r: r["threshold_db"])
    for r in rows:
        r["delta_db"] = r["threshold_db"] - best["threshold_db"]
    print_table(rows, ["T", "threshold_db", "delta_db", "probes"])
    spread = max(r["threshold_db"] for r in rows) - best["threshold_db"]
    print(f"best T = {best['T']:g}; spread {spread:.3f} dB")
    if write_defaults:
        defaults.record(write_defaults, comp, {
            "T_opt": best["T"],
            "drsd_threshold_db": best["threshold_db"],
            "decoder": dec.label(),
            "initial_t_a": dec.t_a_for(comp),
            "target_ber": cfg.target_ber,
            "seed": cfg.seed,
            "sweep": [[r["T"], r["threshold_db"]] for r in rows],
        })
        print(f"recorded T_opt for {defaults.code_key(comp)} in {write_defaults}")
    return rows, {"best_T": best["T"], "spread_db": spread}


def print_ncg(thresholds: list[float], target: float) -> list[dict]:
    rows = [{"threshold_db": x, "target_ber": target, "uncoded_db": uncoded_ebn0_db(target),
             "ncg_db": ncg_db(x, target)} for x in thresholds]
    print_table(rows, ["threshold_db", "target_ber", "uncoded_db", "ncg_db"])
    print(NCG_CONVENTION)
    return rows


def execute(cfg: ExperimentConfig, command: str, write_defaults: str | None = None) -> int:
    cfg.validate()
    res = resolve(cfg, sweep_values(cfg)[0] if cfg.mode == "sweep-T" else None)
    if cfg.mode == "sweep-T" and res.decoders[cfg.decoders[0]].variant is not Variant.DRSD:
        raise ConfigError("sweep-T needs the drsd decoder")
    t0 = time.perf_counter()
    with FrameRunner(cfg.workers) as runner:
        if cfg.mode == "ber":
            rows, extra = run_ber(cfg, res, runner)
        elif cfg.mode == "threshold":
            rows, extra = run_threshold(cfg, res, runner)
        else:
            rows, extra = run_sweep(cfg, res, runner, write_defaults)
    log.info("%s finished in %.1f s", command, time.perf_counter() - t0)
    write_output(cfg.out, _metadata(command, cfg, res), rows, extra)
    return EXIT_OK


# ---- config files --------------------------------------------------------

_INT_KEYS = {"iters", "drsd_iters", "t_a", "seed", "workers", "min_frame_errors", "max_frames"}
_FLOAT_KEYS = {"T", "target_ber", "resolution_db", "ncg_target"}
_STR_KEYS = {"code", "mode", "ebn0", "bracket", "T_values", "baseline", "out"}
_LIST_KEYS = {"decoders", "ncg_thresholds"}
_ALIASES = {"decoder": "decoders", "t": "T", "t_values": "T_values", "resolution": "resolution_db"}


def _key_lines(text: str) -> dict[str, int]:
    lines = {}
    for i, raw in enumerate(text.splitlines(), 1):
        m = re.match(r"\s*([A-Za-z_][\w-]*)\s*[=:]", raw)
        if m:
            lines.setdefault(m.group(1).lower(), i)
    return lines


def load_config(path: str) -> ExperimentConfig:
    """Read the ``[experiment]`` section of an INI file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(str(exc)) from None
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text, source=path)
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError("missing [experiment] section header", exc.lineno, path) from None
    except configparser.DuplicateOptionError as exc:
        raise ConfigError(f"duplicate key {exc.option!r}", exc.lineno, path) from None
    except configparser.ParsingError as exc:
        lineno, line = exc.errors[0]
        raise ConfigError(f"cannot parse {line.strip()!r}", lineno, path) from None
    except configparser.Error as exc:
        raise ConfigError(str(exc), None, path) from None
    if not parser.has_section("experiment"):
        raise ConfigError("missing [experiment] section", None, path)
    lines = _key_lines(text)
    values = {}
    for raw_key, raw in parser.items("experiment"):
        key = _ALIASES.get(raw_key.lower(), raw_key)
        line = lines.get(raw_key.lower())
        try:
            if key in _INT_KEYS:
                values[key] = int(raw)
            elif key in _FLOAT_KEYS:
                values[key] = float(raw)
            elif key in _STR_KEYS:
                values[key] = raw.strip()
            elif key == "decoders":
                values[key] = [d.strip() for d in raw.split(",") if d.strip()]
            elif key == "ncg_thresholds":
                values[key] = [float(v) for v in raw.split(",") if v.strip()]
            else:
                raise ConfigError(f"unknown key {raw_key!r}", line, path)
        except ValueError:
            raise ConfigError(f"bad value {raw!r} for {raw_key!r}", line, path) from None
    for required in ("code", "decoders"):
        if required not in values:
            raise ConfigError(f"missing required key {required!r}", None, path)
    cfg = ExperimentConfig(**values)
    try:
        cfg.validate()
        # catch bad codes, grids and decoder names before any simulation
        parse_code(cfg.code)
        for d in cfg.decoders:
            parse_decoder(d, cfg.iters)
        parse_grid(cfg.ebn0)
        parse_pair(cfg.bracket)
    except ConfigError as exc:
        key = _guess_key(str(exc))
        raise ConfigError(str(exc), lines.get(key), path) from None
    return cfg


def _guess_key(message: str) -> str:
    for word, key in (("code", "code"), ("decoder", "decoder"), ("grid", "ebn0"), ("bracket", "bracket"),
                      ("mode", "mode"), ("target_ber", "target_ber"), ("baseline", "baseline")):
        if message.startswith(word):
            return key
    return ""


# ---- argument parsing ----------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("run control")
    g.add_argument("--seed", type=int, default=None, help="master seed (default 1)")
    g.add_argument("--workers", type=int, default=None, help="worker processes (default 1)")
    g.add_argument("--out", default=None, help="result file; .json or .csv")
    g.add_argument("-v", "--verbose", action="store_true", help="log every probe")


def _experiment_args(p: argparse.ArgumentParser, multi: bool = True) -> None:
    p.add_argument("--code", required=True, help="n,t[,even|bch], e.g. 127,2,even")
    if multi:
        p.add_argument("--decoder", action="append", required=True,
                       help="ibdd | eaed | drsd | genie, optionally NAME:ITERS; repeatable")
    else:
        p.add_argument("--decoder", default="drsd", help="decoder to sweep (default drsd)")
    p.add_argument("--iters", type=int, default=20, help="total iterations (default 20)")
    p.add_argument("--drsd-iters", type=int, default=None, help="scored DRSD iterations (default 4/5 of total)")
    p.add_argument("--T", type=float, default=None, help="erasure threshold (default: bundled table)")
    p.add_argument("--t-a", type=int, default=None, help="initial anchor threshold")
    p.add_argument("--min-frame-errors", type=int, default=50)
    p.add_argument("--max-frames", type=int, default=1_000_000)


def _search_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--target-ber", type=float, default=1e-4)
    p.add_argument("--bracket", default="3.0:5.0", help="lo:hi in dB (default 3.0:5.0)")
    p.add_argument("--resolution", type=float, default=0.02, help="bracket width to stop at, dB")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="drsd", description="Product-code decoding simulator.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ber", help="BER over an Eb/N0 grid")
    _experiment_args(p)
    p.add_argument("--ebn0", default="3.0:0.25:5.0", help="start:step:stop or a comma list")
    _common(p)

    p = sub.add_parser("threshold", help="noise threshold at a target BER")
    _experiment_args(p)
    _search_args(p)
    p.add_argument("--baseline", default=None, help="decoder the gains are measured against")
    p.add_argument("--ncg-threshold", type=float, action="append", default=[],
                   help="extrapolated threshold (dB) to report an NCG for; repeatable")
    p.add_argument("--ncg-target", type=float, default=1e-15)
    _common(p)

    p = sub.add_parser("sweep-T", help="threshold as a function of the erasure threshold")
    _experiment_args(p, multi=False)
    _search_args(p)
    p.add_argument("--values", default="0.9x,1.0x,1.1x",
                   help="T values; 'x' suffix means a multiple of the tuned T")
    p.add_argument("--write-defaults", default=None, metavar="JSON",
                   help="record the best T in this defaults table")
    _common(p)

    p = sub.add_parser("ncg", help="net coding gain for given thresholds")
    p.add_argument("--threshold", type=float, action="append", required=True, help="Eb/N0 in dB; repeatable")
    p.add_argument("--target-ber", type=float, default=1e-15)

    p = sub.add_parser("run", help="run an experiment from an INI file")
    p.add_argument("config")
    p.add_argument("--write-defaults", default=None, metavar="JSON", help=argparse.SUPPRESS)
    _common(p)

    p = sub.add_parser("selftest", help="fast invariant suite")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return ap


def config_from_args(a: argparse.Namespace) -> ExperimentConfig:
    decoders = a.decoder if isinstance(a.decoder, list) else [a.decoder]
    cfg = ExperimentConfig(
        code=a.code, decoders=decoders, mode=a.command,
        iters=a.iters, drsd_iters=a.drsd_iters, T=a.T, t_a=a.t_a,
        min_frame_errors=a.min_frame_errors, max_frames=a.max_frames,
    )
    if a.command == "ber":
        cfg.ebn0 = a.ebn0
    if a.command in ("threshold", "sweep-T"):
        cfg.target_ber, cfg.bracket, cfg.resolution_db = a.target_ber, a.bracket, a.resolution
    if a.command == "threshold":
        cfg.baseline, cfg.ncg_thresholds, cfg.ncg_target = a.baseline, a.ncg_threshold, a.ncg_target
    if a.command == "sweep-T":
        cfg.T_values = a.values
    return cfg


def _apply_globals(cfg: ExperimentConfig, a: argparse.Namespace) -> ExperimentConfig:
    if a.seed is not None:
        cfg.seed = a.seed
    if a.workers is not None:
        cfg.workers = a.workers
    if a.out is not None:
        cfg.out = a.out
    return cfg


def cmd_selftest(inject_fault: bool) -> int:
    results = selftest.run(inject_fault)
    for name, ok, detail in results:
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    failed = sum(not ok for _, ok, _ in results)
    print(f"selftest: {len(results) - failed}/{len(results)} passed")
    return EXIT_OK if failed == 0 else EXIT_SELFTEST


def main(argv: list[str] | None = None) -> int:
    a = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(a, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if a.command == "selftest":
            return cmd_selftest(a.inject_fault)
        if a.command == "ncg":
            if not 0 < a.target_ber < 0.5:
                raise ConfigError(f"target BER {a.target_ber} outside (0, 0.5)")
            print_ncg(a.threshold, a.target_ber)
            return EXIT_OK
        if a.command == "run":
            cfg = _apply_globals(load_config(a.config), a)
            return execute(cfg, f"run {a.config}", a.write_defaults)
        cfg = _apply_globals(config_from_args(a), a)
        return execute(cfg, a.command, getattr(a, "write_defaults", None))
    except ConfigError as exc:
        print(f"drsd: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DrsdError, RuntimeError, ValueError) as exc:
        print(f"drsd: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
