"""Linear codes over F_q: construction, enumeration, minimum distance,
list-decodability checks, and the e1-augmentation constructor."""

from __future__ import annotations

import logging

import numpy as np

from .algebra import FieldSpec, Word, get_field, word, zero_word
from .channel import make_rng
from .config import CODEWORD_CAP, check_enum_cap
from .errors import ValidationError
from .results import HOLDS, INCONCLUSIVE, VIOLATED, Verdict
from .space import digits_of_indices, iter_chunks, space_size

log = logging.getLogger(__name__)


def _row_reduce_rank(field: FieldSpec, rows: np.ndarray) -> int:
    """Rank of a matrix over F_q by Gaussian elimination (in-place copy)."""
    m = [list(map(int, r)) for r in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = field.inv(m[rank][col])
        m[rank] = [field.mul(inv, x) for x in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [field.sub(x, field.mul(c, y)) for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


class LinearCode:
    """A linear [n, k] code, with its q^k codewords enumerated and cached.

    Codeword row 0 is always the zero word; rows follow the base-q message
    order, so the layout is deterministic for a fixed generator.
    """

    def __init__(self, field: FieldSpec, generator: np.ndarray):
        generator = np.ascontiguousarray(generator, dtype=np.uint8)
        if generator.ndim != 2:
            raise ValidationError("generator must be a 2-D matrix")
        k, n = generator.shape
        if n < 1:
            raise ValidationError("block length must be at least 1")
        if np.any(generator >= field.q):
            raise ValidationError(f"generator entries must lie in 0..{field.q - 1}")
        if k and _row_reduce_rank(field, generator) < k:
            raise ValidationError(
                f"generator rows are linearly dependent (rank < {k}); "
                "supply an independent row set so the dimension is meaningful")
        if field.q ** k > CODEWORD_CAP:
            raise ValidationError(
                f"code has q^k = {field.q ** k} codewords, above the cap {CODEWORD_CAP}")
        self.field = field
        self.n = n
        self.k = k
        self.generator = generator
        self.codewords = self._enumerate()
        self.generator.flags.writeable = False
        self.codewords.flags.writeable = False
        self._d_min: int | None = None
        self._member_index: dict[bytes, int] | None = None
        self._cache: dict = {}

    def _enumerate(self) -> np.ndarray:
        q, k, n = self.field.q, self.k, self.n
        count = q ** k
        messages = digits_of_indices(np.arange(count, dtype=np.int64), q, k)
        if self.field.kind == "prime":
            return (messages.astype(np.int64) @ self.generator % q).astype(np.uint8)
        out = np.zeros((count, n), dtype=np.uint8)
        for r in range(k):
            term = self.field.mul_arrays(messages[:, r: r + 1], self.generator[r][None, :])
            out = self.field.add_arrays(out, term)
        return out

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def d_min(self) -> int:
        if self._d_min is None:
            if self.k == 0:
                raise ValidationError("minimum distance is undefined for the zero-dimensional code")
            weights = np.count_nonzero(self.codewords[1:], axis=1)
            self._d_min = int(weights.min())
        return self._d_min

    def codeword(self, row: int) -> Word:
        return Word(self.field, self.codewords[row].tobytes())

    def contains(self, w: Word) -> bool:
        if self._member_index is None:
            self._member_index = {
                self.codewords[i].tobytes(): i for i in range(len(self.codewords))
            }
        return w.field == self.field and w.data in self._member_index

    def __repr__(self):
        return f"LinearCode(q={self.q}, n={self.n}, k={self.k})"

    def describe(self) -> str:
        return f"[{self.n},{self.k}]_q={self.q}"


def from_generator(field: FieldSpec, rows) -> LinearCode:
    """Code spanned by the given rows; rejects rank-deficient matrices."""
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.size == 0:
        raise ValidationError("generator needs at least one row; "
                              "use trivial_code for the zero-dimensional code")
    return LinearCode(field, rows)


def trivial_code(field: FieldSpec, n: int) -> LinearCode:
    """The [n, 0] code containing only the zero word."""
    return LinearCode(field, np.zeros((0, n), dtype=np.uint8))


def min_distance(code: LinearCode) -> int:
    """Least weight of a nonzero codeword (= least pairwise distance)."""
    return code.d_min


def repetition_code(q: int, n: int) -> LinearCode:
    return from_generator(get_field(q), np.ones((1, n), dtype=np.uint8))


def hamming_7_4() -> LinearCode:
    gen = [
        [1, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1, 1],
    ]
    return from_generator(get_field(2), gen)


def augment_e1(code: LinearCode) -> LinearCode:
    """Span of the code and the first standard basis vector e1.

    If e1 is already a codeword the input is returned unchanged.
    """
    e1 = np.zeros(code.n, dtype=np.uint8)
    e1[0] = 1
    if code.contains(Word(code.field, e1.tobytes())):
        log.info("augment_e1: e1 already in %s, returning it unchanged", code.describe())
        return code
    rows = np.vstack([code.generator, e1[None, :]]) if code.k else e1[None, :]
    return LinearCode(code.field, rows)


def random_code(field: FieldSpec, n: int, k: int, seed: int) -> LinearCode:
    """Uniformly random full-rank generator, by rejection; deterministic
    for a fixed seed."""
    if not 1 <= k <= n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}, n={n}")
    rng = make_rng(seed)
    while True:
        gen = rng.integers(0, field.q, size=(k, n), dtype=np.uint8)
        if _row_reduce_rank(field, gen) == k:
            return LinearCode(field, gen)


def is_list_decodable(code: LinearCode, radius: int, list_size: int,
                      mode: str = "exhaustive", budget: int = 10_000,
                      seed: int = 0) -> Verdict:
    """Check that every radius-ball holds at most `list_size` codewords.

    Exhaustive mode scans all q^n centers (cap-guarded) and either holds
    or returns a violating center.  Sampled mode checks `budget` random
    centers and returns violated or inconclusive.
    """
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    if mode == "exhaustive":
        total = space_size(code.q, code.n)
        check_enum_cap(total, f"list-decodability scan of {code.describe()}")
        for start, stop in iter_chunks(total):
            digits = digits_of_indices(np.arange(start, stop, dtype=np.int64),
                                       code.q, code.n)
            counts = _ball_counts(code, digits, radius)
            bad = np.flatnonzero(counts > list_size)
            if bad.size:
                witness = Word(code.field, digits[bad[0]].tobytes())
                return Verdict(VIOLATED, witness)
        return Verdict(HOLDS)
    if mode == "sampled":
        rng = make_rng(seed)
        for start, stop in iter_chunks(budget):
            digits = rng.integers(0, code.q, size=(stop - start, code.n), dtype=np.uint8)
            counts = _ball_counts(code, digits, radius)
            bad = np.flatnonzero(counts > list_size)
            if bad.size:
                witness = Word(code.field, digits[bad[0]].tobytes())
                return Verdict(VIOLATED, witness)
        return Verdict(INCONCLUSIVE)
    raise ValidationError(f"unknown mode {mode!r}; use exhaustive or sampled")


def _ball_counts(code: LinearCode, digits: np.ndarray, radius: int) -> np.ndarray:
    """Number of codewords within `radius` of each row of `digits`."""
    counts = np.zeros(len(digits), dtype=np.int64)
    for cw in code.codewords:
        dist = np.count_nonzero(code.field.sub_arrays(digits, cw[None, :]), axis=1)
        counts += dist <= radius
    return counts


# ---------------------------------------------------------------------------
# Generator-matrix text format: header "q n k", then k rows of n integers.


def parse_code_text(text: str) -> LinearCode:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValidationError('empty code file; expected a "q n k" header line')
    head = lines[0].split()
    if len(head) != 3:
        raise ValidationError(
            f'bad code file header {lines[0]!r}: expected "q n k" '
            "(three integers)")
    try:
        q, n, k = (int(x) for x in head)
    except ValueError as exc:
        raise ValidationError(
            f'bad code file header {lines[0]!r}: expected "q n k" '
            "(three integers)") from exc
    if len(lines) - 1 != k:
        raise ValidationError(
            f"code file declares k={k} generator rows but contains {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise ValidationError(
                f"generator row {ln!r} has {len(parts)} entries, expected n={n}")
        rows.append([int(x) for x in parts])
    return from_generator(get_field(q), rows)


def load_code(path: str) -> LinearCode:
    with open(path, "r", encoding="ascii") as fh:
        return parse_code_text(fh.read())


def dump_code(code: LinearCode) -> str:
    lines = [f"{code.q} {code.n} {code.k}"]
    for row in code.generator:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_code_spec(spec: str) -> LinearCode:
    """Builtin code specs: rep:q:n, hamming:7:4, random:q:n:k:seed,
    augment-e1:<inner spec>; anything else is read as a file path."""
    if spec.startswith("augment-e1:"):
        return augment_e1(parse_code_spec(spec[len("augment-e1:"):]))
    parts = spec.split(":")
    try:
        if parts[0] == "rep" and len(parts) == 3:
            return repetition_code(int(parts[1]), int(parts[2]))
        if parts[0] == "hamming" and parts[1:] == ["7", "4"]:
            return hamming_7_4()
        if parts[0] == "random" and len(parts) == 5:
            q, n, k, seed = (int(x) for x in parts[1:])
            return random_code(get_field(q), n, k, seed)
    except ValidationError:
        raise
    except (ValueError, IndexError) as exc:
        raise ValidationError(f"malformed code spec {spec!r}") from exc
    if parts[0] in {"rep", "hamming", "random"}:
        raise ValidationError(f"malformed code spec {spec!r}")
    return load_code(spec)


def zero(code: LinearCode) -> Word:
    return zero_word(code.field, code.n)


def make_word(code: LinearCode, entries) -> Word:
    w = word(code.field, entries)
    if w.n != code.n:
        raise ValidationError(f"word length {w.n} does not match code length {code.n}")
    return w
