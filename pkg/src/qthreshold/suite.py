"""The `verify` orchestrator: builds a deterministic instance corpus and
runs every requested inequality/structure verifier over it, emitting one
report entry per (verifier, instance)."""

from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

import numpy as np

from .algebra import Word, get_field
from .channel import make_rng, stream_seed
from .codes import (LinearCode, hamming_7_4, is_list_decodable, random_code,
                    repetition_code)
from .decode import omega_translate_check
from .emit import jsonable_witness
from .errors import ValidationError
from .iso import (enumerate_monotone, is_monotone_decreasing,
                  omega_indicator, verify_iso, verify_russo, verify_talagrand)
from .parallel import ordered_map
from .results import HOLDS, Verdict, VerifyEntry, VIOLATED
from .threshold import (e1_augmentation_failure, verify_delta_bound,
                        verify_gbound, verify_largesupport)

ALL_VERIFIERS = ("talagrand", "russo", "iso", "delta-bound", "gbound",
                 "largesupport", "symmetry", "e1-augment")

# Accepted rounding slack per inequality verifier.
TOLERANCES = {
    "talagrand": 1e-12,
    "iso": 1e-12,
    "russo": 1e-10,
    "gbound": 1e-12,
    "e1-augment": 1e-12,
}

_REGION_SPACE_CAP = 3 ** 8   # q^n ceiling for exhaustive region instances


def margin_grid() -> np.ndarray:
    """p = 0.05, 0.10, ..., 0.95."""
    return np.arange(1, 20) * 0.05


def _margin_entry(verifier: str, instance: str, margin: float) -> VerifyEntry:
    tol = TOLERANCES.get(verifier, 1e-12)
    verdict = HOLDS if margin >= -tol else VIOLATED
    return VerifyEntry(verifier, instance, verdict, margin=float(margin))


def _verdict_entry(verifier: str, instance: str, verdict: Verdict,
                   margin: float | None = None) -> VerifyEntry:
    witness = None
    if verdict.witness is not None:
        witness = jsonable_witness({"witness": verdict.witness})
    return VerifyEntry(verifier, instance, verdict.status, margin=margin,
                       witness=witness)


def _max_region_n(q: int, nmax: int) -> int:
    n = 1
    while q ** (n + 1) <= _REGION_SPACE_CAP and n + 1 <= nmax:
        n += 1
    return n


def build_code_corpus(qs: Sequence[int], nmax: int, seed: int,
                      per_q: int = 3) -> list[tuple[str, LinearCode]]:
    """Deterministic mix of repetition and random codes, all small enough
    for exhaustive region scans (q^n <= 3^8)."""
    corpus: list[tuple[str, LinearCode]] = []
    for qi, q in enumerate(sorted(qs)):
        field = get_field(q)
        n_cap = _max_region_n(q, nmax)
        rep_n = min(n_cap, 4)
        corpus.append((f"rep:{q}:{rep_n}", repetition_code(q, rep_n)))
        rng = make_rng(stream_seed(seed, 7_000 + qi))
        for j in range(per_q):
            n = int(rng.integers(2, n_cap + 1))
            k = int(rng.integers(1, min(4, n) + 1))
            code_seed = int(rng.integers(0, 2 ** 32))
            corpus.append((f"random:q={q}:n={n}:k={k}:#{j}",
                           random_code(field, n, k, code_seed)))
    return corpus


def _monotone_families(qs: Sequence[int], nmax: int):
    for q in sorted(qs):
        field = get_field(q)
        for n in range(1, nmax + 1):
            if q ** n > 9:
                break
            yield q, n, field


def run_suite(qs: Sequence[int], nmax: int, seed: int,
              verifiers: Iterable[str] | None = None,
              parallelism: int = 1) -> list[VerifyEntry]:
    chosen = tuple(verifiers) if verifiers is not None else ALL_VERIFIERS
    unknown = set(chosen) - set(ALL_VERIFIERS)
    if unknown:
        raise ValidationError(
            f"unknown verifier(s) {sorted(unknown)}; choose from {ALL_VERIFIERS}")
    grid = margin_grid()
    corpus = build_code_corpus(qs, nmax, seed)
    regions = [(label, code) for label, code in corpus]

    tasks: list[Callable[[], list[VerifyEntry]]] = []

    if {"talagrand", "russo", "iso"} & set(chosen):
        for q, n, field in _monotone_families(qs, nmax):
            tasks.append(_monotone_family_task(chosen, q, n, field, grid))
        for label, code in regions:
            tasks.append(_region_margin_task(chosen, label, code, grid))
    if "delta-bound" in chosen:
        for label, code in regions:
            tasks.append(_delta_task(label, code))
    if "symmetry" in chosen:
        for label, code in regions:
            tasks.append(_symmetry_task(label, code))
    if "gbound" in chosen:
        for q in sorted(qs):
            if q in (2, 3):
                tasks.append(_gbound_task(q))
    if "largesupport" in chosen:
        for qi, q in enumerate(sorted(qs)):
            tasks.append(_largesupport_task(q, nmax, stream_seed(seed, 9_000 + qi)))
    if "e1-augment" in chosen:
        for q in sorted(qs):
            if q == 2:
                tasks.append(_e1_task("rep:2:3", repetition_code(2, 3)))
                tasks.append(_e1_task("hamming:7:4", hamming_7_4()))
            elif q == 3:
                tasks.append(_e1_task("rep:3:4", repetition_code(3, 4)))

    results = ordered_map(lambda t: t(), tasks, parallelism)
    return [entry for sub in results for entry in sub]


def _monotone_family_task(chosen, q, n, field, grid):
    def run() -> list[VerifyEntry]:
        family = list(enumerate_monotone(field, n))
        instance = f"monotone-family:q={q}:n={n}:size={len(family)}"
        out = []
        if "talagrand" in chosen:
            out.append(_margin_entry("talagrand", instance,
                                     min(verify_talagrand(f, grid) for f in family)))
        if "iso" in chosen:
            out.append(_margin_entry("iso", instance,
                                     min(verify_iso(f, grid) for f in family)))
        if "russo" in chosen:
            out.append(_margin_entry("russo", instance,
                                     min(verify_russo(f, grid) for f in family)))
        return out
    return run


def _region_margin_task(chosen, label, code, grid):
    def run() -> list[VerifyEntry]:
        f = omega_indicator(code)
        instance = f"region:{label}"
        out = []
        if "talagrand" in chosen:
            out.append(_margin_entry("talagrand", instance, verify_talagrand(f, grid)))
        if "iso" in chosen:
            out.append(_margin_entry("iso", instance, verify_iso(f, grid)))
        if "russo" in chosen:
            out.append(_margin_entry("russo", instance, verify_russo(f, grid)))
        return out
    return run


def _delta_task(label, code):
    def run() -> list[VerifyEntry]:
        report = verify_delta_bound(code)
        margin = None if report.delta is None else report.delta - report.bound
        verdict = HOLDS if report.holds else VIOLATED
        return [VerifyEntry("delta-bound", f"region:{label}", verdict, margin=margin)]
    return run


def _symmetry_task(label, code):
    def run() -> list[VerifyEntry]:
        translate = omega_translate_check(code)
        monotone = is_monotone_decreasing(omega_indicator(code))
        return [
            _verdict_entry("symmetry", f"translate:{label}", translate),
            _verdict_entry("symmetry", f"region-monotone:{label}", monotone),
        ]
    return run


def _gbound_task(q):
    code = repetition_code(q, 4 * q)
    label = f"rep:{q}:{4 * q}"

    def run() -> list[VerifyEntry]:
        ps = np.arange(0, 13) * 0.05
        worst = math.inf
        for i, p0 in enumerate(ps):
            for p1 in ps[i + 1:]:
                report = verify_gbound(code, float(p0), float(p1))
                worst = min(worst, report.rhs - report.lhs)
        return [_margin_entry("gbound", f"{label}:grid-pairs", worst)]
    return run


def _largesupport_task(q, nmax, seed, count: int = 100):
    def run() -> list[VerifyEntry]:
        rng = make_rng(seed)
        field = get_field(q)
        worst_status = HOLDS
        witness = None
        for _ in range(count):
            n = int(rng.integers(2, max(nmax, 3) + 1))
            k = int(rng.integers(1, min(4, n) + 1))
            code = random_code(field, n, k, int(rng.integers(0, 2 ** 32)))
            z = Word(field, rng.integers(0, q, size=n, dtype=np.uint8).tobytes())
            verdict = verify_largesupport(code, z)
            if not verdict.holds:
                worst_status = VIOLATED
                witness = jsonable_witness(
                    {"witness": {"code": code.describe(), "z": z, "c": verdict.witness}})
                break
        instance = f"random-pairs:q={q}:count={count}"
        return [VerifyEntry("largesupport", instance, worst_status, witness=witness)]
    return run


def _e1_task(label, code_prime):
    def run() -> list[VerifyEntry]:
        rows = e1_augmentation_failure(code_prime, np.arange(1, 11) * 0.05)
        margin = min(row.error_prob - row.lower_bound for row in rows)
        out = [_margin_entry("e1-augment", f"error-floor:{label}", margin)]
        radius = (code_prime.d_min - 1) // 2
        verdict = is_list_decodable(code_prime, radius, 1)
        out.append(_verdict_entry("e1-augment", f"unique-radius-list:{label}", verdict))
        return out
    return run
