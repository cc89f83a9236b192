"""Bundled per-code erasure thresholds.

``data/defaults.json`` maps a code key such as ``"127,2,even"`` to the
erasure threshold T that minimized the DRSD noise threshold in an offline
``drsd sweep-T`` run, together with the measured thresholds of that run.
Codes without an entry have no default; callers must pass T explicitly.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .bch import ComponentCodeSpec

SCHEMA_VERSION = 1


def code_key(comp: ComponentCodeSpec) -> str:
    return f"{comp.n},{comp.t},{'even' if comp.even_weight else 'bch'}"


@lru_cache(maxsize=None)
def load_table() -> dict:
    text = resources.files("drsd").joinpath("data/defaults.json").read_text()
    return json.loads(text)


def lookup(comp: ComponentCodeSpec) -> dict | None:
    return load_table()["codes"].get(code_key(comp))


def erasure_threshold(comp: ComponentCodeSpec) -> float:
    """Tuned T for ``comp``; KeyError if the table has no entry."""
    entry = lookup(comp)
    if entry is None:
        known = ", ".join(sorted(load_table()["codes"]))
        raise KeyError(f"no tuned erasure threshold for {code_key(comp)} (table has: {known})")
    return float(entry["T_opt"])


def record(path: str | Path, comp: ComponentCodeSpec, entry: dict) -> None:
    """Insert or replace one code's entry in a table file on disk."""
    path = Path(path)
    table = json.loads(path.read_text()) if path.exists() else {"schema_version": SCHEMA_VERSION, "codes": {}}
    table["codes"][code_key(comp)] = entry
    table["codes"] = dict(sorted(table["codes"].items()))
    path.write_text(json.dumps(table, indent=2) + "\n")
    load_table.cache_clear()
