"""Finite-field arithmetic over F_q and words (vectors) in F_q^n.

Field elements are integer labels 0..q-1.  Prime fields use residue
arithmetic mod q; the supported prime powers (4, 8, 9, 16, 25, 27) use
lookup tables built from fixed irreducible polynomials, where a label's
base-p digits are the polynomial coefficients (low degree first).

Words are immutable byte strings over a field, ordered by the weighted
total order `precedes`: lower Hamming weight first; on equal weight the
word whose support comes *after* in lexicographic index order is smaller;
on equal support the word whose entry string comes after in full
lexicographic order (0 < 1 < ... < q-1) is smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

MAX_PRIME = 251

# label -> (characteristic, degree, irreducible polynomial coefficients
# low-to-high, leading coefficient omitted is NOT: full monic poly given)
_IRREDUCIBLE = {
    4: (2, 2, (1, 1, 1)),        # x^2 + x + 1
    8: (2, 3, (1, 1, 0, 1)),     # x^3 + x + 1
    9: (3, 2, (1, 0, 1)),        # x^2 + 1
    16: (2, 4, (1, 1, 0, 0, 1)),  # x^4 + x + 1
    25: (5, 2, (2, 0, 1)),       # x^2 + 2
    27: (3, 3, (1, 2, 0, 1)),    # x^3 + 2x + 1
}

_AXIOM_CHECK_MAX = 32


def _primes_upto(limit: int) -> frozenset[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
    return frozenset(i for i in range(limit + 1) if sieve[i])


_PRIMES = _primes_upto(MAX_PRIME)


def _label_to_coeffs(label: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(label % p)
        label //= p
    return out


def _coeffs_to_label(coeffs: Sequence[int], p: int) -> int:
    label = 0
    for c in reversed(coeffs):
        label = label * p + c
    return label


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], poly: Sequence[int],
                  p: int, m: int) -> list[int]:
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by the monic irreducible of degree m
    for d in range(2 * m - 2, m - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(m):
                prod[d - m + j] = (prod[d - m + j] - c * poly[j]) % p
    return prod[:m]


class FieldSpec:
    """Arithmetic for one finite field F_q.

    Supported orders: primes up to 251 (residue arithmetic) and the prime
    powers 4, 8, 9, 16, 25, 27 (table arithmetic).  Table-backed fields
    are verified against the full field axioms at construction.
    """

    def __init__(self, q: int):
        if q in _PRIMES:
            self.q = q
            self.kind = "prime"
            self.char = q
            self.degree = 1
            self._add = self._sub = self._mul = None
            self._neg = self._inv = None
        elif q in _IRREDUCIBLE:
            p, m, poly = _IRREDUCIBLE[q]
            self.q = q
            self.kind = "prime-power"
            self.char = p
            self.degree = m
            self._build_tables(p, m, poly)
            if q <= _AXIOM_CHECK_MAX:
                self._verify_axioms()
        else:
            raise ValidationError(
                f"unsupported field order {q}: need a prime <= {MAX_PRIME} "
                f"or one of {sorted(_IRREDUCIBLE)}")

    def _build_tables(self, p: int, m: int, poly: Sequence[int]) -> None:
        q = self.q
        coeffs = [_label_to_coeffs(a, p, m) for a in range(q)]
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            for b in range(q):
                add[a, b] = _coeffs_to_label(
                    [(x + y) % p for x, y in zip(coeffs[a], coeffs[b])], p)
                mul[a, b] = _coeffs_to_label(
                    _poly_mul_mod(coeffs[a], coeffs[b], poly, p, m), p)
        neg = np.zeros(q, dtype=np.uint8)
        for a in range(q):
            neg[a] = _coeffs_to_label([(-x) % p for x in coeffs[a]], p)
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            hits = np.flatnonzero(mul[a] == 1)
            if hits.size != 1:
                raise ValidationError(
                    f"table construction for F_{q} produced a non-invertible "
                    f"element {a}; irreducible polynomial is wrong")
            inv[a] = hits[0]
        sub = add[:, neg]
        for arr in (add, sub, mul, neg, inv):
            arr.flags.writeable = False
        self._add, self._sub, self._mul = add, sub, mul
        self._neg, self._inv = neg, inv

    def _verify_axioms(self) -> None:
        add, mul = self._add, self._mul
        q = self.q
        if not np.array_equal(add, add.T) or not np.array_equal(mul, mul.T):
            raise ValidationError(f"F_{q} tables are not commutative")
        if not np.array_equal(add[0], np.arange(q)):
            raise ValidationError(f"F_{q}: 0 is not the additive identity")
        if not np.array_equal(mul[1], np.arange(q)):
            raise ValidationError(f"F_{q}: 1 is not the multiplicative identity")
        # (a+b)+c == a+(b+c) and (a*b)*c == a*(b*c), all q^3 triples
        if not np.array_equal(add[add], np.take(add, add, axis=1)):
            raise ValidationError(f"F_{q}: addition is not associative")
        if not np.array_equal(mul[mul], np.take(mul, mul, axis=1)):
            raise ValidationError(f"F_{q}: multiplication is not associative")
        # a*(b+c) == a*b + a*c
        lhs = np.take(mul, add, axis=1)
        rhs = add[mul[:, :, None], mul[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise ValidationError(f"F_{q}: distributivity fails")
        if np.any(add[np.arange(q), self._neg] != 0):
            raise ValidationError(f"F_{q}: additive inverses fail")
        nz = np.arange(1, q)
        if np.any(mul[nz, self._inv[nz]] != 1):
            raise ValidationError(f"F_{q}: multiplicative inverses fail")

    # -- scalar operations ------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise ValidationError(f"{a!r} is not an element of F_{self.q}")
        return int(a)

    def add(self, a: int, b: int) -> int:
        a, b = self.check(a), self.check(b)
        if self.kind == "prime":
            return (a + b) % self.q
        return int(self._add[a, b])

    def sub(self, a: int, b: int) -> int:
        a, b = self.check(a), self.check(b)
        if self.kind == "prime":
            return (a - b) % self.q
        return int(self._sub[a, b])

    def neg(self, a: int) -> int:
        a = self.check(a)
        if self.kind == "prime":
            return (-a) % self.q
        return int(self._neg[a])

    def mul(self, a: int, b: int) -> int:
        a, b = self.check(a), self.check(b)
        if self.kind == "prime":
            return (a * b) % self.q
        return int(self._mul[a, b])

    def inv(self, a: int) -> int:
        a = self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no multiplicative inverse in F_{self.q}")
        if self.kind == "prime":
            return pow(a, self.q - 2, self.q)
        return int(self._inv[a])

    # -- vectorized operations (inputs assumed valid uint8 labels) --------

    def add_arrays(self, a, b):
        if self.kind == "prime":
            if self.q == 2:
                return np.bitwise_xor(a, b)
            return (np.add(a, b, dtype=np.int16) % self.q).astype(np.uint8)
        return self._add[a, b]

    def sub_arrays(self, a, b):
        if self.kind == "prime":
            if self.q == 2:
                return np.bitwise_xor(a, b)
            return (np.subtract(a, b, dtype=np.int16) % self.q).astype(np.uint8)
        return self._sub[a, b]

    def neg_array(self, a):
        if self.kind == "prime":
            return ((-np.asarray(a, dtype=np.int16)) % self.q).astype(np.uint8)
        return self._neg[a]

    def mul_arrays(self, a, b):
        if self.kind == "prime":
            return (np.multiply(a, b, dtype=np.int32) % self.q).astype(np.uint8)
        return self._mul[a, b]

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.q == self.q

    def __hash__(self):
        return hash(("FieldSpec", self.q))

    def __repr__(self):
        return f"FieldSpec(q={self.q}, kind={self.kind!r})"


_FIELD_CACHE: dict[int, FieldSpec] = {}


def get_field(q: int) -> FieldSpec:
    """Shared, validated FieldSpec for order q (construction runs once)."""
    spec = _FIELD_CACHE.get(q)
    if spec is None:
        spec = FieldSpec(q)
        _FIELD_CACHE[q] = spec
    return spec


_UNARY_OPS = frozenset({"inv", "neg"})
_BINARY_OPS = frozenset({"add", "sub", "mul"})


def field_op(spec: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    """Dispatch a named field operation; `inv` and `neg` take one operand."""
    if op in _BINARY_OPS:
        if b is None:
            raise ValidationError(f"operation {op!r} needs two operands")
        return getattr(spec, op)(a, b)
    if op in _UNARY_OPS:
        if b is not None:
            raise ValidationError(f"operation {op!r} takes one operand")
        return getattr(spec, op)(a)
    raise ValidationError(f"unknown field operation {op!r}")


# ---------------------------------------------------------------------------
# Words


@dataclass(frozen=True)
class Word:
    """An immutable vector in F_q^n, stored one byte per symbol."""

    field: FieldSpec
    data: bytes

    def __post_init__(self):
        if len(self.data) and max(self.data) >= self.field.q:
            raise ValidationError(
                f"word contains a symbol >= q={self.field.q}")

    @property
    def n(self) -> int:
        return len(self.data)

    @property
    def array(self) -> np.ndarray:
        return np.frombuffer(self.data, dtype=np.uint8)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self.data)

    @property
    def is_zero(self) -> bool:
        return self.data.count(0) == len(self.data)

    def __add__(self, other: "Word") -> "Word":
        _check_same_space(self, other)
        return Word(self.field, self.field.add_arrays(self.array, other.array).tobytes())

    def __sub__(self, other: "Word") -> "Word":
        _check_same_space(self, other)
        return Word(self.field, self.field.sub_arrays(self.array, other.array).tobytes())

    def __neg__(self) -> "Word":
        return Word(self.field, self.field.neg_array(self.array).tobytes())

    def __repr__(self):
        return f"Word(q={self.field.q}, {tuple(self.data)})"


def word(field: FieldSpec, entries: Iterable[int]) -> Word:
    """Build a word, validating every entry against the field."""
    data = bytes(field.check(e) for e in entries)
    return Word(field, data)


def zero_word(field: FieldSpec, n: int) -> Word:
    return Word(field, bytes(n))


def _check_same_space(a: Word, b: Word) -> None:
    if a.field != b.field or len(a.data) != len(b.data):
        raise ValidationError(
            f"words live in different spaces: F_{a.field.q}^{len(a.data)} "
            f"vs F_{b.field.q}^{len(b.data)}")


def weight(w: Word) -> int:
    """Hamming weight: number of nonzero entries."""
    return len(w.data) - w.data.count(0)


def support(w: Word) -> tuple[int, ...]:
    """Indices (1-based) of the nonzero entries, increasing."""
    return tuple(i + 1 for i, v in enumerate(w.data) if v)


def distance(a: Word, b: Word) -> int:
    """Hamming distance, the weight of the entrywise difference."""
    _check_same_space(a, b)
    return int(np.count_nonzero(a.field.sub_arrays(b.array, a.array)))


def substitute(w: Word, i: int, a: int) -> Word:
    """Copy of `w` with coordinate i (1-based) set to element a."""
    if not 1 <= i <= w.n:
        raise ValidationError(f"coordinate {i} out of range 1..{w.n}")
    a = w.field.check(a)
    buf = bytearray(w.data)
    buf[i - 1] = a
    return Word(w.field, bytes(buf))


def precedes(a: Word, b: Word) -> bool:
    """Strict total order on words: True iff a comes before b.

    Lower weight wins; on equal weight the support that comes after in
    lexicographic index order wins; on equal support the entry string
    that comes after in full lexicographic order wins.
    """
    _check_same_space(a, b)
    if a.data == b.data:
        return False
    wa, wb = weight(a), weight(b)
    if wa != wb:
        return wa < wb
    sa, sb = support(a), support(b)
    if sa != sb:
        return sa > sb
    return a.data > b.data
