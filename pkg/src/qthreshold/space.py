"""Index arithmetic for enumerating F_q^n.

A word is addressed by the base-q value of its digit string with
coordinate 1 as the most significant digit, so index order coincides with
the full lexicographic order on words.  All scans are chunked so that no
intermediate array exceeds a few megabytes.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .config import CHUNK_ROWS
from .errors import ValidationError

_KEY_BITS = 62


def space_size(q: int, n: int) -> int:
    return q ** n


def fits_int64(q: int, n: int) -> bool:
    """True when base-q indices and support bitmasks both fit in int64."""
    return n <= _KEY_BITS and q ** n < (1 << _KEY_BITS)


def powers(q: int, n: int) -> np.ndarray:
    """[q^(n-1), ..., q, 1] as int64; coordinate 1 is most significant."""
    if not fits_int64(q, n):
        raise ValidationError(f"index space q^n = {q}^{n} exceeds 62 bits")
    out = np.empty(n, dtype=np.int64)
    v = 1
    for i in range(n - 1, -1, -1):
        out[i] = v
        v *= q
    return out


def bit_powers(n: int) -> np.ndarray:
    """[2^(n-1), ..., 2, 1] as int64 for support bitmasks."""
    if n > _KEY_BITS:
        raise ValidationError(f"support mask needs {n} bits, above 62")
    return np.left_shift(np.int64(1), np.arange(n - 1, -1, -1, dtype=np.int64))


def digits_of_indices(idx: np.ndarray, q: int, n: int) -> np.ndarray:
    """Base-q digit matrix (len(idx), n) for the given word indices."""
    out = np.empty((len(idx), n), dtype=np.uint8)
    rem = idx.astype(np.int64, copy=True)
    for i in range(n - 1, -1, -1):
        out[:, i] = rem % q
        rem //= q
    return out


def encode_digits(digits: np.ndarray, q: int) -> np.ndarray:
    """Inverse of digits_of_indices (row-wise)."""
    n = digits.shape[1]
    return digits @ powers(q, n)


def iter_chunks(total: int, chunk: int = CHUNK_ROWS) -> Iterator[tuple[int, int]]:
    start = 0
    while start < total:
        stop = min(start + chunk, total)
        yield start, stop
        start = stop
