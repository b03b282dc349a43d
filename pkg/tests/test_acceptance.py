"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line with its runtime (run with `pytest tests/test_acceptance.py -v -s`).

Criterion 9's "delta such that the bound is in (0,1)" clause is
implemented as stated and fails: for the [12,1] ternary repetition code
no admissible delta can place 1 - 2L exp(-((1-p)/4)(sqrt(d)/q^1.5) delta)
inside (0,1) (the exponent tops out near 0.009 while ln(2L) >= ln 4).
See test_c09b; the remainder of the criterion passes in test_c09a.
"""

import json
import math
import time

import numpy as np
import pytest

from qthreshold import (augment_e1, e1_augmentation_failure,
                        enumerate_monotone, erasure_ambiguity, exact_moments,
                        expectation_derivative, get_field, hamming_7_4,
                        is_list_decodable, is_monotone_decreasing, make_rng,
                        omega_indicator, omega_translate_check, random_code,
                        repetition_code, success_exact, success_mc,
                        success_probability, threshold_envelope,
                        verify_delta_bound, verify_iso, verify_largesupport,
                        verify_main_bound, verify_russo, verify_talagrand,
                        word, zero_word)
from qthreshold.cli import main as cli_main
from qthreshold.codes import _ball_counts
from qthreshold.space import digits_of_indices

GRID_19 = [0.05 * j for j in range(1, 20)]


def report(criterion: str, ok: bool, started: float, limit_s: float, detail: str):
    took = time.monotonic() - started
    line = (f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} "
            f"[{took:.1f}s / limit {limit_s:.0f}s] {detail}")
    print(line)
    assert ok and took <= limit_s, line


def monotone_corpus():
    """All monotone decreasing indicators on (q=2, n <= 3) and (q=3, n=2)."""
    out = []
    for q, n in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        if (q, n) == (3, 1):
            continue            # not in the stated family, keep it minimal
        out.extend(enumerate_monotone(get_field(q), n))
    return out


def random_region_codes(count=50, seed=1202):
    """Random codes over q in {2,3} with q^n <= 3^8, k <= 4."""
    rng = make_rng(seed)
    codes = []
    for _ in range(count):
        q = int(rng.choice([2, 3]))
        n_max = 12 if q == 2 else 8
        n = int(rng.integers(2, n_max + 1))
        k = int(rng.integers(1, min(4, n) + 1))
        codes.append(random_code(get_field(q), n, k,
                                 seed=int(rng.integers(0, 2 ** 32))))
    return codes


def fixed_small_codes():
    return [repetition_code(2, 3), repetition_code(2, 8), repetition_code(3, 4),
            hamming_7_4(), augment_e1(repetition_code(2, 3)),
            augment_e1(hamming_7_4())]


def test_c01_sqrt_boundary_inequality():
    started = time.monotonic()
    family = monotone_corpus()
    worst = min(verify_talagrand(f, GRID_19) for f in family)
    report("1 (sqrt-boundary inequality)", worst >= -1e-12, started, 120,
           f"{len(family)} monotone indicators, min margin {worst:.3e}")


def test_c02_boundary_count_inequality():
    started = time.monotonic()
    family = monotone_corpus()
    margins = [verify_iso(f, GRID_19) for f in family]
    codes = random_region_codes()
    margins += [verify_iso(omega_indicator(c), GRID_19) for c in codes]
    worst = min(margins)
    report("2 (boundary-count inequality)", worst >= -1e-12, started, 300,
           f"{len(family)} indicators + {len(codes)} regions, "
           f"min margin {worst:.3e}")


def test_c03_derivative_bound_and_fd_oracle():
    started = time.monotonic()
    family = monotone_corpus()
    regions = [omega_indicator(c) for c in random_region_codes()]
    worst = min(verify_russo(f, GRID_19) for f in family + regions)
    fd_ok = True
    step = 1e-6
    for f in family + regions[:10]:
        for p in (0.1, 0.45, 0.8):
            analytic = expectation_derivative(f, p)
            fd = (exact_moments(f, p + step).ef
                  - exact_moments(f, p - step).ef) / (2 * step)
            if abs(analytic - fd) > 1e-6 * max(1.0, abs(analytic)):
                fd_ok = False
    report("3 (derivative bound)", worst >= -1e-10 and fd_ok, started, 120,
           f"min margin {worst:.3e}, finite-difference agreement "
           f"{'ok' if fd_ok else 'BROKEN'}")


def test_c04_boundary_floor():
    started = time.monotonic()
    rng = make_rng(404)
    codes = [repetition_code(2, 8), repetition_code(3, 12)]
    for _ in range(100):
        q = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(2, 9))
        k = int(rng.integers(1, min(4, n) + 1))
        codes.append(random_code(get_field(q), n, k,
                                 seed=int(rng.integers(0, 2 ** 32))))
    violations = [c.describe() for c in codes if not verify_delta_bound(c).holds]
    report("4 (region boundary floor)", not violations, started, 300,
           f"{len(codes)} codes, violations: {violations or 'none'}")


def test_c05_fresh_support_inequality():
    started = time.monotonic()
    rng = make_rng(505)
    violations = 0
    instances = 0
    while instances < 10_000:
        q = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(2, 11))
        k = int(rng.integers(1, min(4, n) + 1))
        code = random_code(get_field(q), n, k, seed=int(rng.integers(0, 2 ** 32)))
        for _ in range(5):
            z = word(code.field, rng.integers(0, q, size=n, dtype=np.uint8).tobytes())
            if not verify_largesupport(code, z).holds:
                violations += 1
            instances += 1
    report("5 (fresh-support inequality)", violations == 0, started, 60,
           f"{instances} random (code, word) instances, {violations} violations")


def test_c06_threshold_envelope():
    started = time.monotonic()
    bad = []
    for code in (repetition_code(2, 8), repetition_code(3, 12)):
        grid = [j / 100 for j in range(61)]
        g = {p: success_probability(code, p) for p in grid}
        for i, p0 in enumerate(grid):
            for p1 in grid[i + 1:]:
                lhs = g[p1] * (1.0 - g[p0])
                rhs = threshold_envelope(code.q, code.d_min, p0, p1)
                if lhs > rhs + 1e-12:
                    bad.append((code.describe(), p0, p1))
    report("6 (threshold envelope)", not bad, started, 180,
           f"2 codes x 1830 grid pairs, violations: {bad or 'none'}")


def test_c07_translation_symmetry_and_region_monotonicity():
    started = time.monotonic()
    codes = [c for c in fixed_small_codes() + random_region_codes()
             if c.q ** c.n <= 3 ** 8]
    bad = []
    for code in codes:
        if not omega_translate_check(code).holds:
            bad.append(("translate", code.describe()))
        if not is_monotone_decreasing(omega_indicator(code)).holds:
            bad.append(("monotone", code.describe()))
    report("7 (symmetry + region monotonicity)", not bad, started, 180,
           f"{len(codes)} codes exhaustively checked, witnesses: {bad or 'none'}")


def test_c08_repetition_closed_form():
    started = time.monotonic()
    code = repetition_code(2, 3)
    grid = [j / 20 for j in range(20)]
    curve = success_exact(code, grid)
    worst = max(abs(row.g - ((1 - row.p) ** 3 + 3 * row.p * (1 - row.p) ** 2))
                for row in curve.rows)
    report("8 (closed form)", worst <= 1e-12, started, 1,
           f"20 grid points, max deviation {worst:.2e}")


def _minimal_certified_list_size(code, radius):
    """Smallest L with every radius-ball holding <= L codewords, by
    exhaustive scan."""
    worst = 0
    total = code.q ** code.n
    for start in range(0, total, 1 << 16):
        idx = np.arange(start, min(start + (1 << 16), total), dtype=np.int64)
        digits = digits_of_indices(idx, code.q, code.n)
        worst = max(worst, int(_ball_counts(code, digits, radius).max()))
    return worst


def test_c09a_list_to_channel_bound_and_intermediates():
    """Envelope inequality for every admissible delta (vacuously, the
    bound is negative at this blocklength) plus the exact intermediate
    chain: ML success >= randomized-list success >= 1/(2L)."""
    started = time.monotonic()
    code = repetition_code(3, 12)
    p, L = 0.6, 2
    radius = math.floor(p * code.n + 1e-9)
    assert is_list_decodable(code, radius, L).holds
    assert _minimal_certified_list_size(code, radius) == L
    ok = True
    details = []
    for delta_gap in (0.01, 0.03, 0.05, 0.062):
        rep = verify_main_bound(code, p, L, delta_gap)
        ok &= rep.status == "holds" and rep.intermediates_hold
        details.append(f"delta={delta_gap}: success={rep.success_at_shifted:.6f} "
                       f">= bound={rep.bound:.3f}")
    rep = verify_main_bound(code, p, L, 0.05)
    chain = (rep.ml_success_at_mid >= rep.list_success_at_mid - 1e-12
             >= 0.5 / L - 1e-12)
    report("9a (list-to-channel bound + intermediates)", ok and chain,
           started, 120,
           f"exhaustively certified (p={p}, L={L}) at radius {radius}; "
           f"ML@mid={rep.ml_success_at_mid:.6f} >= "
           f"list@mid={rep.list_success_at_mid:.6f} >= {0.5 / L}")


def test_c09b_bound_attains_unit_interval():
    """The criterion as stated: pick delta so the success lower bound
    lands in (0,1).  Unattainable for [12,1]_3 — documented in the
    decisions ledger; this test states the fact and fails honestly."""
    started = time.monotonic()
    code = repetition_code(3, 12)
    n = code.n
    shift = n ** -0.25
    best = -math.inf
    best_at = None
    for pj in range(1, 151):                   # p up to 1.5 (radius >= n caps out)
        p = pj / 100
        radius = min(n, math.floor(p * n + 1e-9))
        L = _minimal_certified_list_size(code, radius)
        max_delta = p - shift
        if max_delta <= 0:
            continue
        for dj in range(1, 1000):
            d = dj * max_delta / 999
            bound = 1 - 2 * L * threshold_envelope(code.q, code.d_min, p - d, p)
            if bound > best:
                best, best_at = bound, (p, L, d)
    report("9b (bound inside (0,1) attainable)",
           best_at is not None and 0.0 < best < 1.0, started, 120,
           f"best achievable bound {best:.4f} at (p, L, delta)={best_at}; "
           "a positive bound needs exp-argument > ln(2L) >= 1.386, "
           "impossible at n=12 (max ~0.009)")


def test_c10_augmentation_destroys_reliability():
    started = time.monotonic()
    ok = True
    details = []
    for code_prime in (repetition_code(2, 3), hamming_7_4()):
        radius = (code_prime.d_min - 1) // 2
        ld = is_list_decodable(code_prime, radius, 1)
        rows = e1_augmentation_failure(code_prime,
                                       [0.05 * j for j in range(1, 11)])
        ok &= ld.holds and all(r.holds for r in rows)
        details.append(f"{code_prime.describe()}: unique-decodable at {radius}, "
                       f"min error-p gap "
                       f"{min(r.error_prob - r.p for r in rows):.4f}")
    report("10 (e1 augmentation)", ok, started, 60, "; ".join(details))


def test_c11_erasure_exact_vs_mc():
    started = time.monotonic()
    code = hamming_7_4()
    sent = zero_word(code.field, 7)
    ok = True
    details = []
    for p in (0.1, 0.3, 0.5):
        exact = erasure_ambiguity(code, sent, p, mode="exact")
        mc = erasure_ambiguity(code, sent, p, mode="mc",
                               samples=1_000_000, seed=1111)
        gap = abs(mc.value - exact.value)
        ok &= gap <= mc.half_width
        details.append(f"p={p}: |{mc.value:.5f}-{exact.value:.5f}|"
                       f"={gap:.2e} <= {mc.half_width:.2e}")
    report("11 (erasure exact vs MC)", ok, started, 120, "; ".join(details))


def test_c12_mc_within_band_of_exact():
    started = time.monotonic()
    rng = make_rng(1212)
    misses = []
    for i in range(20):
        q = int(rng.choice([2, 3]))
        n_max = 12 if q == 2 else 8
        n = int(rng.integers(2, n_max + 1))
        k = int(rng.integers(1, min(4, n) + 1))
        code = random_code(get_field(q), n, k, seed=int(rng.integers(0, 2 ** 32)))
        for p in (0.1, 0.3, 0.5):
            row = success_mc(code, p, 100_000, seed=int(rng.integers(0, 2 ** 32)),
                             confidence=1e-6)
            exact = success_probability(code, p)
            if abs(row.g - exact) > row.half_width:
                misses.append((code.describe(), p))
    report("12 (MC within Hoeffding band)", not misses, started, 300,
           f"20 codes x 3 rates x 1e5 samples, misses: {misses or 'none'}")


def test_c13_byte_determinism_across_parallelism(tmp_path):
    started = time.monotonic()
    outputs = {}
    for tag, degree in [("a", "1"), ("b", "8"), ("c", "1")]:
        path = tmp_path / f"mc-{tag}.csv"
        assert cli_main(["threshold", "--code", "rep:2:8",
                         "--grid", "0.05:0.3:0.05", "--mode", "mc",
                         "--samples", "100000", "--seed", "13",
                         "--parallel", degree, "--out", str(path)]) == 0
        outputs[tag] = path.read_bytes()
    csv_ok = outputs["a"] == outputs["b"] == outputs["c"]
    reports = {}
    for tag, degree in [("a", "1"), ("b", "8")]:
        path = tmp_path / f"verify-{tag}.json"
        assert cli_main(["verify", "--all", "--q", "2,3", "--nmax", "5",
                         "--seed", "7", "--parallel", degree,
                         "--out", str(path)]) == 0
        reports[tag] = path.read_bytes()
    json_ok = reports["a"] == reports["b"]
    json.loads(reports["a"])
    report("13 (byte determinism at parallelism 1 vs 8)", csv_ok and json_ok,
           started, 120, f"csv identical: {csv_ok}, report identical: {json_ok}")


@pytest.mark.skip(reason="criterion 14 exercises the plotting frontend; "
                         "run `npm test` in frontend/ (vitest suite renders "
                         "the [8,1] binary curve with the p0=0.1 envelope and "
                         "checks domination row by row)")
def test_c14_plots_secondary():
    pass
