"""Deterministic CSV/JSON emission.

Floats in CSV are printed with 17 significant digits, '.' decimal
separator and '\n' line endings, so a fixed configuration and seed
yield byte-identical files at any parallelism degree.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Iterable

from .algebra import Word
from .results import AmbiguityEstimate, VerifyEntry
from .threshold import ThresholdCurve

CURVE_HEADER = "p,g,logit_g,mode,half_width,samples"
AMBIGUITY_HEADER = "p,ambiguity,mode,half_width,samples"
REPORT_KIND = "qthreshold-verify"


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def curve_to_csv(curve: ThresholdCurve) -> str:
    lines = [CURVE_HEADER]
    for row in curve.rows:
        lines.append(",".join([
            fmt_float(row.p),
            fmt_float(row.g),
            "" if row.logit_g is None else fmt_float(row.logit_g),
            row.mode,
            fmt_float(row.half_width),
            "" if row.samples is None else str(row.samples),
        ]))
    return "\n".join(lines) + "\n"


def ambiguity_to_csv(rows: Iterable[AmbiguityEstimate]) -> str:
    lines = [AMBIGUITY_HEADER]
    for row in rows:
        lines.append(",".join([
            fmt_float(row.p),
            fmt_float(row.value),
            row.mode,
            fmt_float(row.half_width),
            "" if row.samples is None else str(row.samples),
        ]))
    return "\n".join(lines) + "\n"


def jsonable_witness(obj) -> dict | list | int | float | str | None:
    """Convert witness payloads (words, tuples, verdicts) to JSON values."""
    if obj is None or isinstance(obj, (int, float, str, bool)):
        return obj
    if isinstance(obj, Word):
        return {"q": obj.field.q, "entries": list(obj.data)}
    if isinstance(obj, dict):
        return {str(k): jsonable_witness(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable_witness(v) for v in obj]
    return repr(obj)


def report_payload(entries: Iterable[VerifyEntry], seed: int,
                   params: dict) -> dict:
    return {
        "report": REPORT_KIND,
        "seed": seed,
        "params": params,
        "entries": [
            {
                "verifier": e.verifier,
                "instance": e.instance,
                "verdict": e.verdict,
                "margin": e.margin,
                "witness": e.witness,
            }
            for e in entries
        ],
    }


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def load_report_schema() -> dict:
    ref = resources.files("qthreshold").joinpath("schemas/verify_report.schema.json")
    return json.loads(ref.read_text(encoding="ascii"))
