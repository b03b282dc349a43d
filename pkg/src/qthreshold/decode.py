"""Maximum-likelihood decoding with weighted-order tie-breaking.

The decoder maps a received word m to the codeword c whose residual m - c
is minimal under `algebra.precedes`.  Residuals of distinct codewords are
distinct, so the minimum is unique and the decoder is deterministic.  It
is symmetric: decoding commutes with translation by codewords, which the
exhaustive `omega_translate_check` verifies.

Whole-space scans index words as in `space`; the comparison key of a word
is the triple (weight, support bitmask, entry value) where a smaller
bitmask means a lexicographically later support and a larger entry value
means a lexicographically later word.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Word, precedes, weight
from .codes import LinearCode
from .config import check_enum_cap
from .errors import ValidationError
from .results import HOLDS, Verdict, VIOLATED
from .space import (bit_powers, digits_of_indices, encode_digits, fits_int64,
                    iter_chunks, powers, space_size)


@dataclass(frozen=True)
class DecodeResult:
    codeword: Word
    distance: int
    residual: Word


def _check_word(code: LinearCode, m: Word) -> None:
    if m.field != code.field or m.n != code.n:
        raise ValidationError(
            f"word in F_{m.field.q}^{m.n} does not match code {code.describe()}")


def _component_keys(field, digits: np.ndarray, powq: np.ndarray, pow2: np.ndarray):
    nz = digits != 0
    wt = nz.sum(axis=1, dtype=np.int64)
    mask = nz @ pow2
    val = digits @ powq
    return wt, mask, val


class _PackedOrder:
    """Single-int64 encoding of the word order, with the decoded codeword
    row stored in the low bits: minimizing the packed key over codewords
    finds the order-minimal residual.  Usable when weight, support mask,
    reversed value and row index together fit in 63 bits."""

    _TABLE_MAX = 1 << 20

    def __init__(self, code: LinearCode):
        q, n = code.q, code.n
        rows = len(code.codewords)
        self.val_bits = max(1, (q ** n - 1).bit_length())
        self.mask_bits = n
        self.wt_bits = n.bit_length()
        self.row_bits = max(1, (rows - 1).bit_length())
        self.fits = (self.val_bits + self.mask_bits + self.wt_bits
                     + self.row_bits) <= 63
        self.val_max = q ** n - 1
        self.row_mask = (1 << self.row_bits) - 1

    def keys(self, field, digits, powq, pow2) -> np.ndarray:
        wt, mask, val = _component_keys(field, digits, powq, pow2)
        return ((wt << self.mask_bits | mask) << self.val_bits) | (self.val_max - val)


def _packed_order(code: LinearCode) -> _PackedOrder:
    order = code._cache.get("packed_order")
    if order is None:
        order = _PackedOrder(code)
        code._cache["packed_order"] = order
    return order


def _key0_table(code: LinearCode, order: _PackedOrder) -> np.ndarray:
    """Packed order key of the word at every index (cached)."""
    key0 = code._cache.get("key0_table")
    if key0 is None:
        total = space_size(code.q, code.n)
        powq, pow2 = powers(code.q, code.n), bit_powers(code.n)
        key0 = np.empty(total, dtype=np.int64)
        for start, stop in iter_chunks(total):
            digits = digits_of_indices(np.arange(start, stop, dtype=np.int64),
                                       code.q, code.n)
            key0[start:stop] = order.keys(code.field, digits, powq, pow2)
        key0.flags.writeable = False
        code._cache["key0_table"] = key0
    return key0


def ml_decode(code: LinearCode, m: Word) -> DecodeResult:
    """Codeword whose residual against m is order-minimal; ties cannot
    occur, and the returned distance is the minimum distance from m to
    the code."""
    _check_word(code, m)
    if fits_int64(code.q, code.n):
        row = _ml_row_vectorized(code, m)
    else:
        row = _ml_row_fallback(code, m)
    cw = code.codeword(row)
    residual = m - cw
    return DecodeResult(cw, weight(residual), residual)


def _ml_row_vectorized(code: LinearCode, m: Word) -> int:
    residuals = code.field.sub_arrays(m.array[None, :], code.codewords)
    wt, mask, val = _component_keys(code.field, residuals,
                                    powers(code.q, code.n), bit_powers(code.n))
    rows = np.flatnonzero(wt == wt.min())
    rows = rows[mask[rows] == mask[rows].min()]
    rows = rows[val[rows] == val[rows].max()]
    return int(rows[0])


def _ml_row_fallback(code: LinearCode, m: Word) -> int:
    best_row, best = 0, m - code.codeword(0)
    for row in range(1, len(code.codewords)):
        residual = m - code.codeword(row)
        if precedes(residual, best):
            best_row, best = row, residual
    return best_row


def in_omega(code: LinearCode, z: Word) -> bool:
    """True iff z decodes to the zero codeword."""
    return ml_decode(code, z).codeword.is_zero


def dstar_batch(code: LinearCode, digits: np.ndarray) -> np.ndarray:
    """Decoded codeword row index for each row of a digit matrix."""
    powq, pow2 = powers(code.q, code.n), bit_powers(code.n)
    order = _packed_order(code)
    use_table = (order.fits
                 and space_size(code.q, code.n) <= _PackedOrder._TABLE_MAX)
    key0 = _key0_table(code, order) if use_table else None
    out = np.empty(len(digits), dtype=np.int32)
    for start, stop in iter_chunks(len(digits)):
        block = digits[start:stop]
        if use_table:
            out[start:stop] = _dstar_block_packed(code, block, powq, order, key0)
        else:
            out[start:stop] = _dstar_block_staged(code, block, powq, pow2)
    return out


def _dstar_block_packed(code, block, powq, order: _PackedOrder,
                        key0: np.ndarray) -> np.ndarray:
    best = key0[block @ powq] << order.row_bits
    for row in range(1, len(code.codewords)):
        residual_idx = code.field.sub_arrays(
            block, code.codewords[row][None, :]) @ powq
        cand = (key0[residual_idx] << order.row_bits) | row
        np.minimum(best, cand, out=best)
    return (best & order.row_mask).astype(np.int32)


def _dstar_block_staged(code, block, powq, pow2) -> np.ndarray:
    bwt, bmask, bval = _component_keys(code.field, block, powq, pow2)
    best = np.zeros(len(block), dtype=np.int32)
    for row in range(1, len(code.codewords)):
        res = code.field.sub_arrays(block, code.codewords[row][None, :])
        wt, mask, val = _component_keys(code.field, res, powq, pow2)
        better = (wt < bwt) | ((wt == bwt) & ((mask < bmask)
                  | ((mask == bmask) & (val > bval))))
        best[better] = row
        np.copyto(bwt, wt, where=better)
        np.copyto(bmask, mask, where=better)
        np.copyto(bval, val, where=better)
    return best


def omega_batch(code: LinearCode, digits: np.ndarray) -> np.ndarray:
    return dstar_batch(code, digits) == 0


def dstar_table(code: LinearCode) -> np.ndarray:
    """Decoded row index for every word of F_q^n, in index order."""
    total = space_size(code.q, code.n)
    check_enum_cap(total, f"decoding-region table of {code.describe()}")
    out = np.empty(total, dtype=np.int32)
    for start, stop in iter_chunks(total):
        digits = digits_of_indices(np.arange(start, stop, dtype=np.int64),
                                   code.q, code.n)
        out[start:stop] = dstar_batch(code, digits)
    return out


def omega_table(code: LinearCode) -> np.ndarray:
    """Indicator table of the zero codeword's decoding region."""
    cache = code._cache.get("omega_table")
    if cache is None:
        cache = dstar_table(code) == 0
        code._cache["omega_table"] = cache
    return cache


def omega_translate_check(code: LinearCode) -> Verdict:
    """Exhaustively verify that decoding commutes with translation:
    z decodes to 0 exactly when z + c decodes to c, for every codeword."""
    total = space_size(code.q, code.n)
    check_enum_cap(total, f"translation symmetry scan of {code.describe()}")
    dstar = dstar_table(code)
    for start, stop in iter_chunks(total):
        idx = np.arange(start, stop, dtype=np.int64)
        digits = digits_of_indices(idx, code.q, code.n)
        base_in = dstar[idx] == 0
        for row in range(len(code.codewords)):
            shifted = code.field.add_arrays(digits, code.codewords[row][None, :])
            agree = (dstar[encode_digits(shifted, code.q)] == row) == base_in
            if not agree.all():
                bad = int(np.flatnonzero(~agree)[0])
                witness = (Word(code.field, digits[bad].tobytes()),
                           code.codeword(row))
                return Verdict(VIOLATED, witness)
    return Verdict(HOLDS)


def list_decode_ball(code: LinearCode, m: Word, radius: int) -> set[Word]:
    """All codewords within Hamming distance `radius` of m."""
    return {code.codeword(int(r)) for r in _ball_rows(code, m, radius)}


def _ball_rows(code: LinearCode, m: Word, radius: int) -> np.ndarray:
    _check_word(code, m)
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    dist = np.count_nonzero(
        code.field.sub_arrays(m.array[None, :], code.codewords), axis=1)
    return np.flatnonzero(dist <= radius)


def randomized_list_decode(code: LinearCode, m: Word, radius: int,
                           rng: np.random.Generator) -> Word | None:
    """Uniform choice among the codewords within `radius` of m, or None
    when the ball holds no codeword (decode failure, not an error)."""
    rows = _ball_rows(code, m, radius)
    if rows.size == 0:
        return None
    return code.codeword(int(rows[rng.integers(rows.size)]))


def erasure_candidates(code: LinearCode, c: Word, mask: np.ndarray) -> set[Word]:
    """Codewords agreeing with c on every unerased coordinate (mask 1 =
    erased).  Always contains c; a singleton means unique recovery."""
    _check_word(code, c)
    if not code.contains(c):
        raise ValidationError("erasure candidates are defined for a sent codeword")
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != (code.n,):
        raise ValidationError(f"mask must have length {code.n}")
    agree = ((code.codewords == c.array[None, :]) | mask[None, :]).all(axis=1)
    return {code.codeword(int(r)) for r in np.flatnonzero(agree)}
