"""Analysis of {0,1}-valued functions on F_q^n under coordinate noise.

For an indicator f, the boundary count h_f(z) is zero unless f(z) = 1, in
which case it counts the zero coordinates of z that can be pushed to some
nonzero value on which f vanishes.  Expectations under the noise model
are computed by weight stratification: the probability of a word depends
only on its weight, so one table scan serves every noise rate.
"""

from __future__ import annotations

import math
from typing import Callable, Iterator

import numpy as np
from numpy.polynomial import polynomial as npoly

from .algebra import FieldSpec, Word
from .channel import weight_probabilities
from .codes import LinearCode
from .config import check_enum_cap
from .decode import omega_table
from .errors import MonotonicityError, ValidationError
from .results import HOLDS, Moments, Verdict, VIOLATED
from .space import digits_of_indices, iter_chunks, powers, space_size


class IndicatorFn:
    """A {0,1}-valued function on F_q^n held as a truth table.

    The table is indexed by the base-q value of the word (coordinate 1
    most significant).  Weight and boundary histograms are computed once
    on demand and cached.
    """

    def __init__(self, field: FieldSpec, n: int, table: np.ndarray):
        table = np.asarray(table, dtype=bool)
        if table.shape != (space_size(field.q, n),):
            raise ValidationError(
                f"truth table must have q^n = {space_size(field.q, n)} entries")
        self.field = field
        self.n = n
        self.table = table
        self._cache: dict = {}

    @classmethod
    def from_predicate(cls, field: FieldSpec, n: int,
                       pred: Callable[[Word], bool]) -> "IndicatorFn":
        total = space_size(field.q, n)
        check_enum_cap(total, f"truth table over F_{field.q}^{n}")
        table = np.empty(total, dtype=bool)
        for start, stop in iter_chunks(total):
            digits = digits_of_indices(np.arange(start, stop, dtype=np.int64),
                                       field.q, n)
            for j in range(stop - start):
                table[start + j] = bool(pred(Word(field, digits[j].tobytes())))
        return cls(field, n, table)

    def evaluate(self, z: Word) -> bool:
        if z.field != self.field or z.n != self.n:
            raise ValidationError("word does not match the function's domain")
        return bool(self.table[int(z.array @ powers(self.field.q, self.n))])

    def evaluate_batch(self, digits: np.ndarray) -> np.ndarray:
        return self.table[digits @ powers(self.field.q, self.n)]

    def __repr__(self):
        ones = int(self.table.sum())
        return f"IndicatorFn(q={self.field.q}, n={self.n}, |f^-1(1)|={ones})"


def omega_indicator(code: LinearCode) -> IndicatorFn:
    """Indicator of the zero codeword's decoding region (one instance per
    code, so its histogram caches are shared)."""
    f = code._cache.get("omega_indicator")
    if f is None:
        f = IndicatorFn(code.field, code.n, omega_table(code))
        code._cache["omega_indicator"] = f
    return f


# ---------------------------------------------------------------------------
# Boundary functional


def h_table(f: IndicatorFn) -> np.ndarray:
    """Boundary counts for every word, in table index order."""
    cached = f._cache.get("h_table")
    if cached is not None:
        return cached
    q, n = f.field.q, f.n
    powq = powers(q, n)
    total = len(f.table)
    out = np.zeros(total, dtype=np.int16)
    for start, stop in iter_chunks(total):
        idx = np.arange(start, stop, dtype=np.int64)
        live = idx[f.table[idx]]
        if live.size == 0:
            continue
        digits = digits_of_indices(live, q, n)
        h = np.zeros(len(live), dtype=np.int16)
        for i in range(n):
            at_zero = np.flatnonzero(digits[:, i] == 0)
            if at_zero.size == 0:
                continue
            base = live[at_zero]
            exits = np.zeros(at_zero.size, dtype=bool)
            for a in range(1, q):
                exits |= ~f.table[base + a * powq[i]]
            h[at_zero] += exits
        out[live] = h
    f._cache["h_table"] = out
    return out


def h_value(f: IndicatorFn, z: Word) -> int:
    """Boundary count at a single word."""
    if z.field != f.field or z.n != f.n:
        raise ValidationError("word does not match the function's domain")
    q, n = f.field.q, f.n
    powq = powers(q, n)
    idx = int(z.array @ powq)
    if not f.table[idx]:
        return 0
    count = 0
    for i in range(n):
        if z.data[i] != 0:
            continue
        if any(not f.table[idx + a * powq[i]] for a in range(1, q)):
            count += 1
    return count


def delta(f: IndicatorFn) -> int | None:
    """Minimum positive boundary count, or None when the boundary is empty."""
    h = h_table(f)
    positive = h[h > 0]
    return int(positive.min()) if positive.size else None


# ---------------------------------------------------------------------------
# Monotonicity


def is_monotone_decreasing(f: IndicatorFn) -> Verdict:
    """Check that raising a zero coordinate to any nonzero value never
    increases f.  (This is the direction decoding regions of linear codes
    satisfy: zeroing out noise can only help decode to zero.)  The
    violated verdict carries (word-with-zero-coordinate, i, a)."""
    return _monotone_check(f, decreasing=True)


def is_monotone_increasing(f: IndicatorFn) -> Verdict:
    """Mirror-image check: zeroing a coordinate never increases f."""
    return _monotone_check(f, decreasing=False)


def _monotone_check(f: IndicatorFn, decreasing: bool) -> Verdict:
    q, n = f.field.q, f.n
    powq = powers(q, n)
    total = len(f.table)
    for start, stop in iter_chunks(total):
        idx = np.arange(start, stop, dtype=np.int64)
        digits = digits_of_indices(idx, q, n)
        for i in range(n):
            base = idx[digits[:, i] == 0]
            if base.size == 0:
                continue
            f0 = f.table[base]
            for a in range(1, q):
                fa = f.table[base + a * powq[i]]
                viol = (fa & ~f0) if decreasing else (f0 & ~fa)
                if viol.any():
                    at = int(base[np.flatnonzero(viol)[0]])
                    digits_at = digits_of_indices(
                        np.array([at], dtype=np.int64), q, n)[0]
                    return Verdict(VIOLATED,
                                   (Word(f.field, digits_at.tobytes()), i + 1, a))
    return Verdict(HOLDS)


def enumerate_monotone(field: FieldSpec, n: int) -> Iterator[IndicatorFn]:
    """All monotone decreasing indicators on F_q^n; the domain is capped
    at q^n <= 9 since there are 2^(q^n) candidate tables."""
    total = space_size(field.q, n)
    if total > 9:
        raise ValidationError(
            f"monotone enumeration needs 2^(q^n) = 2^{total} candidates; "
            "q^n must be at most 9")
    shifts = np.arange(total)
    for bits in range(1 << total):
        table = ((bits >> shifts) & 1).astype(bool)
        f = IndicatorFn(field, n, table)
        if is_monotone_decreasing(f).holds:
            yield f


# ---------------------------------------------------------------------------
# Exact expectations


def weight_histogram(f: IndicatorFn) -> np.ndarray:
    """A[w] = number of words of weight w with f = 1."""
    cached = f._cache.get("weight_histogram")
    if cached is not None:
        return cached
    q, n = f.field.q, f.n
    out = np.zeros(n + 1, dtype=np.int64)
    for start, stop in iter_chunks(len(f.table)):
        idx = np.arange(start, stop, dtype=np.int64)
        digits = digits_of_indices(idx, q, n)
        wt = np.count_nonzero(digits, axis=1)
        out += np.bincount(wt[f.table[idx]], minlength=n + 1)
    f._cache["weight_histogram"] = out
    return out


def joint_histogram(f: IndicatorFn) -> np.ndarray:
    """J[w, v] = number of words of weight w with boundary count v."""
    cached = f._cache.get("joint_histogram")
    if cached is not None:
        return cached
    q, n = f.field.q, f.n
    h = h_table(f)
    out = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    for start, stop in iter_chunks(len(f.table)):
        idx = np.arange(start, stop, dtype=np.int64)
        digits = digits_of_indices(idx, q, n)
        wt = np.count_nonzero(digits, axis=1).astype(np.int64)
        flat = wt * (n + 1) + h[idx]
        out += np.bincount(flat, minlength=len(out))
    out = out.reshape(n + 1, n + 1)
    f._cache["joint_histogram"] = out
    return out


def exact_moments(f: IndicatorFn, p: float) -> Moments:
    """E[f], E[h_f] and E[sqrt(h_f)] under noise rate p."""
    n = f.n
    probs = weight_probabilities(f.field.q, n, p)
    ef = float(weight_histogram(f) @ probs)
    joint = joint_histogram(f)
    v = np.arange(n + 1, dtype=np.float64)
    eh = float((joint @ v) @ probs)
    esqrt = float((joint @ np.sqrt(v)) @ probs)
    return Moments(ef, eh, esqrt)


def expectation_polynomial(f: IndicatorFn) -> np.ndarray:
    """Coefficients of p -> E[f] as a degree-n polynomial (exact expansion
    of the weight-stratified sum)."""
    cached = f._cache.get("expectation_polynomial")
    if cached is not None:
        return cached
    q, n = f.field.q, f.n
    hist = weight_histogram(f)
    coeffs = np.zeros(n + 1)
    for w in range(n + 1):
        if hist[w] == 0:
            continue
        tail = npoly.polypow([1.0, -1.0], n - w)
        coeffs[w:] += (hist[w] / (q - 1) ** w) * tail
    f._cache["expectation_polynomial"] = coeffs
    return coeffs


def expectation_derivative(f: IndicatorFn, p: float) -> float:
    """Analytic d/dp of E[f] at noise rate p."""
    return float(npoly.polyval(p, npoly.polyder(expectation_polynomial(f))))


# ---------------------------------------------------------------------------
# Inequality verifiers.  Each returns the minimum margin over the grid;
# a nonnegative margin (up to rounding slack) means the inequality held.


def _require_monotone_decreasing(f: IndicatorFn, who: str) -> None:
    verdict = is_monotone_decreasing(f)
    if not verdict.holds:
        z, i, a = verdict.witness
        raise MonotonicityError(
            f"{who} requires a monotone decreasing function; raising "
            f"coordinate {i} of {tuple(z.data)} to {a} increases it",
            witness=verdict.witness)


def verify_talagrand(f: IndicatorFn, p_grid) -> float:
    """Min over the grid of E[sqrt(h_f)] - ((1-p)/2) E[f](1 - E[f])."""
    _require_monotone_decreasing(f, "the square-root boundary bound")
    margins = []
    for p in p_grid:
        m = exact_moments(f, p)
        margins.append(m.esqrt_h - 0.5 * (1.0 - p) * m.ef * (1.0 - m.ef))
    return min(margins)


def verify_iso(f: IndicatorFn, p_grid) -> float:
    """Min over the grid of E[h_f] - ((1-p)/2) sqrt(delta_f) E[f](1-E[f]);
    an empty boundary makes the right-hand side zero."""
    _require_monotone_decreasing(f, "the boundary-count bound")
    d = delta(f)
    root = math.sqrt(d) if d is not None else 0.0
    margins = []
    for p in p_grid:
        m = exact_moments(f, p)
        margins.append(m.eh - 0.5 * (1.0 - p) * root * m.ef * (1.0 - m.ef))
    return min(margins)


def verify_russo(f: IndicatorFn, p_grid) -> float:
    """Min over the grid of -dE[f]/dp - E[h_f]/(q-1)."""
    _require_monotone_decreasing(f, "the derivative bound")
    margins = []
    for p in p_grid:
        m = exact_moments(f, p)
        margins.append(-expectation_derivative(f, p) - m.eh / (f.field.q - 1))
    return min(margins)
