"""Success-probability curves and sharp-threshold verifiers.

g(p) is the probability that a noisy corruption of the zero codeword
still decodes to zero; by translation symmetry this equals the success
probability for every transmitted codeword.  The central quantitative
statement checked here is the envelope

    g(p1) (1 - g(p0))  <=  exp(-((1-p1)/4) (sqrt(d_min)/q^(3/2)) (p1-p0))

for 0 <= p0 <= p1 <= 1 and codes with d_min >= 4q, together with its
consequence for list-decodable codes: high decoding success at noise
rate p - n^(-1/4) - delta whenever every radius-floor(p n) ball holds at
most L codewords.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Word
from .channel import hoeffding_radius, make_rng, NoiseSpec, sample_noisy_batch, \
    stream_seed, weight_probabilities
from .codes import LinearCode, _ball_counts, augment_e1, is_list_decodable
from .config import CHUNK_ROWS, DEFAULT_CONFIDENCE, check_enum_cap
from .decode import omega_batch
from .errors import ValidationError
from .iso import delta as iso_delta, omega_indicator, weight_histogram
from .parallel import ordered_map
from .results import (AmbiguityEstimate, DeltaBoundReport, FailureRow,
                      GBoundReport, HOLDS, MainBoundReport,
                      PRECONDITION_UNMET, Verdict, VIOLATED)
from .space import digits_of_indices, iter_chunks, space_size

_MARGIN_SLACK = 1e-12


@dataclass(frozen=True)
class CurveRow:
    p: float
    g: float
    logit_g: float | None
    mode: str
    half_width: float
    samples: int | None


@dataclass(frozen=True)
class ThresholdCurve:
    rows: tuple[CurveRow, ...]


def _logit(g: float) -> float | None:
    if 0.0 < g < 1.0:
        return math.log(g / (1.0 - g))
    return None


def q_ary_entropy(q: int, p: float) -> float:
    """(1-p) log_q 1/(1-p) + p log_q (q-1)/p, with continuous endpoints."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"entropy argument {p} outside [0, 1]")
    if q < 2:
        raise ValidationError("alphabet size must be at least 2")
    lq = math.log(q)
    out = 0.0
    if p < 1.0:
        out += (1.0 - p) * (-math.log1p(-p)) / lq
    if p > 0.0:
        out += p * math.log((q - 1) / p) / lq
    return out


def success_probability(code: LinearCode, p: float) -> float:
    """Exact g(p) via the decoding region's weight enumerator."""
    hist = weight_histogram(omega_indicator(code))
    return float(hist @ weight_probabilities(code.q, code.n, p))


def success_exact(code: LinearCode, p_grid) -> ThresholdCurve:
    hist = weight_histogram(omega_indicator(code))
    rows = []
    for p in p_grid:
        g = float(hist @ weight_probabilities(code.q, code.n, p))
        rows.append(CurveRow(float(p), g, _logit(g), "exact", 0.0, None))
    return ThresholdCurve(tuple(rows))


def success_mc(code: LinearCode, p: float, samples: int, seed: int,
               confidence: float = DEFAULT_CONFIDENCE, parallelism: int = 1,
               task_base: int = 0) -> CurveRow:
    """Monte Carlo estimate of g(p) with a two-sided Hoeffding half-width.

    Work is split into fixed-size chunks regardless of parallelism; chunk
    i draws from the stream seeded with seed XOR (task_base + i), so the
    estimate is bit-reproducible at every parallelism degree.
    """
    if samples < 1:
        raise ValidationError("need at least one sample")
    spec = NoiseSpec(p, code.field, code.n)
    chunks = list(iter_chunks(samples, CHUNK_ROWS))

    def run(task):
        index, (start, stop) = task
        rng = make_rng(stream_seed(seed, task_base + index))
        words = sample_noisy_batch(spec, stop - start, rng)
        return int(omega_batch(code, words).sum())

    hits = ordered_map(run, list(enumerate(chunks)), parallelism)
    g = sum(hits) / samples
    return CurveRow(float(p), g, _logit(g), "mc",
                    hoeffding_radius(samples, confidence), samples)


def curve_mc(code: LinearCode, p_grid, samples: int, seed: int,
             confidence: float = DEFAULT_CONFIDENCE,
             parallelism: int = 1) -> ThresholdCurve:
    """MC curve; grid point i uses task indices offset by i << 32 so no
    two chunks anywhere in the run share a stream."""
    rows = [
        success_mc(code, float(p), samples, seed, confidence, parallelism,
                   task_base=i << 32)
        for i, p in enumerate(p_grid)
    ]
    return ThresholdCurve(tuple(rows))


# ---------------------------------------------------------------------------
# Support-size and boundary bounds


def verify_largesupport(code: LinearCode, z: Word) -> Verdict:
    """For every nonzero codeword c at least as far from z as 0 is, check

        |supp(c) \\ supp(z)|  >=  d_min/q - d(z,c) + min_c' d(z,c')

    using exact integer arithmetic (both sides scaled by q)."""
    if z.field != code.field or z.n != code.n:
        raise ValidationError("word does not match the code's space")
    if code.k == 0:
        return Verdict(HOLDS)
    z_arr = z.array
    dists = np.count_nonzero(
        code.field.sub_arrays(z_arr[None, :], code.codewords), axis=1)
    d0 = int(np.count_nonzero(z_arr))
    nearest = int(dists.min())
    fresh_support = ((code.codewords != 0) & (z_arr == 0)[None, :]).sum(axis=1)
    lhs = code.q * fresh_support
    rhs = code.d_min - code.q * dists + code.q * nearest
    bad = (dists >= d0) & (lhs < rhs)
    bad[0] = False
    rows = np.flatnonzero(bad)
    if rows.size:
        return Verdict(VIOLATED, code.codeword(int(rows[0])))
    return Verdict(HOLDS)


def verify_delta_bound(code: LinearCode) -> DeltaBoundReport:
    """Minimum positive boundary count of the decoding region against the
    guarantee d_min/q - 3; the bound is vacuous when nonpositive or when
    the region has no boundary."""
    d = iso_delta(omega_indicator(code))
    bound = code.d_min / code.q - 3.0
    vacuous = bound <= 0.0 or d is None
    holds = vacuous or (code.q * d >= code.d_min - 3 * code.q)
    return DeltaBoundReport(d, bound, holds, vacuous)


def threshold_envelope(q: int, d_min: int, p0: float, p1: float) -> float:
    """exp(-((1-p1)/4) (sqrt(d_min)/q^(3/2)) (p1-p0))."""
    rate = (1.0 - p1) / 4.0 * math.sqrt(d_min) / (q * math.sqrt(q))
    return math.exp(-rate * (p1 - p0))


def verify_gbound(code: LinearCode, p0: float, p1: float, mode: str = "exact",
                  samples: int = 100_000, seed: int = 0,
                  confidence: float = DEFAULT_CONFIDENCE,
                  parallelism: int = 1) -> GBoundReport:
    """Check g(p1)(1 - g(p0)) against the threshold envelope.

    Requires d_min >= 4q (otherwise: precondition-unmet, no verdict).  In
    MC mode both factors are inflated by their half-widths, so a reported
    violation is statistically unambiguous.
    """
    if not 0.0 <= p0 <= p1 <= 1.0:
        raise ValidationError(f"need 0 <= p0 <= p1 <= 1, got {p0}, {p1}")
    if code.d_min < 4 * code.q:
        return GBoundReport(p0, p1, math.nan, math.nan, mode, PRECONDITION_UNMET)
    if mode == "exact":
        lhs = success_probability(code, p1) * (1.0 - success_probability(code, p0))
    elif mode == "mc":
        row0 = success_mc(code, p0, samples, seed, confidence, parallelism,
                          task_base=0)
        row1 = success_mc(code, p1, samples, seed, confidence, parallelism,
                          task_base=1 << 32)
        lhs = (row1.g + row1.half_width) * (1.0 - row0.g + row0.half_width)
    else:
        raise ValidationError(f"unknown mode {mode!r}; use exact or mc")
    rhs = threshold_envelope(code.q, code.d_min, p0, p1)
    status = HOLDS if lhs <= rhs + _MARGIN_SLACK else VIOLATED
    return GBoundReport(p0, p1, lhs, rhs, mode, status)


# ---------------------------------------------------------------------------
# List decoding to channel success


def list_success_exact(code: LinearCode, radius: int, p: float) -> float:
    """Exact success probability, for the zero codeword, of the decoder
    that lists all codewords within `radius` of the received word and
    answers uniformly among them."""
    total = space_size(code.q, code.n)
    check_enum_cap(total, f"list-decoder success scan of {code.describe()}")
    probs = weight_probabilities(code.q, code.n, p)
    acc = 0.0
    for start, stop in iter_chunks(total):
        digits = digits_of_indices(np.arange(start, stop, dtype=np.int64),
                                   code.q, code.n)
        wt = np.count_nonzero(digits, axis=1)
        counts = _ball_counts(code, digits, radius)
        sel = wt <= radius
        acc += float(np.sum(probs[wt[sel]] / counts[sel]))
    return acc


def verify_main_bound(code: LinearCode, p: float, list_size: int, delta: float,
                      mode: str = "exact", samples: int = 100_000,
                      seed: int = 0, confidence: float = DEFAULT_CONFIDENCE,
                      ) -> MainBoundReport:
    """Finite-length check of the list-to-channel bound.

    Premises (verified, not assumed): every radius-floor(pn) ball holds
    at most `list_size` codewords (exhaustive scan); d_min >= 4q; and the
    shifted rate p - n^(-1/4) - delta is a valid probability.  Then the
    success probability at the shifted rate must be at least

        1 - 2 L exp(-((1-p)/4) (sqrt(d_min)/q^(3/2)) delta),

    and two exact intermediates are recorded: the maximum-likelihood
    success at p - n^(-1/4) dominates the randomized list decoder's,
    which itself clears 1/(2L).
    """
    if delta <= 0:
        raise ValidationError("delta must be positive")
    if list_size < 1:
        raise ValidationError("list size must be at least 1")
    n = code.n
    radius = math.floor(p * n + 1e-9)
    p_mid = p - n ** -0.25
    p_shifted = p_mid - delta
    bound = 1.0 - 2.0 * list_size * threshold_envelope(code.q, code.d_min,
                                                       p - delta, p)

    def unmet(reason: str) -> MainBoundReport:
        return MainBoundReport(p, list_size, delta, radius, p_mid, p_shifted,
                               math.nan, bound, PRECONDITION_UNMET, reason,
                               vacuous=False)

    if code.d_min < 4 * code.q:
        return unmet(f"minimum distance {code.d_min} is below 4q = {4 * code.q}")
    if p_shifted < 0.0:
        return unmet(f"shifted rate p - n^(-1/4) - delta = {p_shifted} is negative")
    verdict = is_list_decodable(code, radius, list_size, mode="exhaustive")
    if not verdict.holds:
        return unmet(f"a radius-{radius} ball holds more than {list_size} codewords")

    if mode == "exact":
        success = success_probability(code, p_shifted)
    elif mode == "mc":
        success = success_mc(code, p_shifted, samples, seed, confidence).g
    else:
        raise ValidationError(f"unknown mode {mode!r}; use exact or mc")
    ml_mid = success_probability(code, p_mid)
    list_mid = list_success_exact(code, radius, p_mid)
    vacuous = bound <= 0.0
    status = HOLDS if success >= bound - _MARGIN_SLACK else VIOLATED
    return MainBoundReport(p, list_size, delta, radius, p_mid, p_shifted,
                           success, bound, status, None, vacuous,
                           ml_success_at_mid=ml_mid,
                           list_success_at_mid=list_mid,
                           half_inverse_list=0.5 / list_size)


# ---------------------------------------------------------------------------
# Erasures


def erasure_ambiguity(code: LinearCode, c: Word, p: float, mode: str = "exact",
                      samples: int = 100_000, seed: int = 0,
                      confidence: float = DEFAULT_CONFIDENCE) -> AmbiguityEstimate:
    """Probability that an erasure pattern leaves the sent codeword c
    ambiguous (some other codeword agrees on all unerased coordinates).

    Exact mode enumerates all 2^n patterns and uses the fact that, for a
    linear code, ambiguity happens exactly when some nonzero codeword's
    support is fully erased (so the value does not depend on c).  MC mode
    samples patterns and counts agreeing codewords directly.
    """
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"erasure probability {p} outside [0, 1]")
    if not code.contains(c):
        raise ValidationError("ambiguity is defined for a sent codeword")
    if mode == "exact":
        total = 1 << code.n
        check_enum_cap(total, f"erasure-pattern scan of {code.describe()}")
        probs = weight_probabilities(2, code.n, p)
        supports = code.codewords[1:] != 0
        value = 0.0
        for start, stop in iter_chunks(total):
            bits = digits_of_indices(np.arange(start, stop, dtype=np.int64),
                                     2, code.n).astype(bool)
            covered = np.zeros(stop - start, dtype=bool)
            for sup in supports:
                covered |= bits[:, sup].all(axis=1)
            wt = bits.sum(axis=1)
            value += float(probs[wt[covered]].sum())
        return AmbiguityEstimate(p, value, "exact", 0.0, None)
    if mode == "mc":
        chunks = list(iter_chunks(samples, CHUNK_ROWS))
        hits = 0
        c_arr = c.array
        for index, (start, stop) in enumerate(chunks):
            rng = make_rng(stream_seed(seed, index))
            masks = rng.random((stop - start, code.n)) < p
            counts = np.zeros(stop - start, dtype=np.int64)
            for cw in code.codewords:
                counts += ((cw == c_arr)[None, :] | masks).all(axis=1)
            hits += int((counts > 1).sum())
        return AmbiguityEstimate(p, hits / samples, "mc",
                                 hoeffding_radius(samples, confidence), samples)
    raise ValidationError(f"unknown mode {mode!r}; use exact or mc")


# ---------------------------------------------------------------------------
# Reliability failure of e1-augmented codes


def e1_augmentation_failure(code_prime: LinearCode, p_grid) -> list[FailureRow]:
    """Exact decoding error of span(code', e1) over the grid, with the
    verdict that the error is at least p at every point: any corruption
    of the first coordinate already forces a wrong decode."""
    aug = augment_e1(code_prime)
    rows = []
    for p in p_grid:
        err = 1.0 - success_probability(aug, float(p))
        rows.append(FailureRow(float(p), err, float(p),
                               err >= float(p) - _MARGIN_SLACK))
    return rows
