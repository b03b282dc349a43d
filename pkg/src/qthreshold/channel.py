"""Noise models and sampling.

The corruption model replaces each coordinate independently: it stays 0
with probability 1-p and takes each nonzero value with probability
p/(q-1), so the probability of seeing one fixed word of weight w is
(p/(q-1))^w (1-p)^(n-w).

All randomness flows through numpy's PCG64 generator seeded with a 64-bit
integer; the algorithm is fixed so identical seeds give identical streams
on every platform.  Parallel work derives per-task streams with
stream_seed(seed, task_index) = seed XOR task_index, where task indices
are chosen to be distinct across the whole run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import FieldSpec, Word
from .errors import ValidationError

_MASK64 = (1 << 64) - 1

# Switch to log-space products once (1-p)^n risks underflow.
_LOG_SPACE_MIN_N = 65


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & _MASK64))


def stream_seed(seed: int, task_index: int) -> int:
    return (seed ^ task_index) & _MASK64


@dataclass(frozen=True)
class NoiseSpec:
    p: float
    field: FieldSpec
    n: int

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValidationError(f"corruption probability {self.p} outside [0, 1]")
        if self.n < 0:
            raise ValidationError("length must be nonnegative")


def sample_noisy_batch(spec: NoiseSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, n) matrix of independent noisy words.

    The draw order (corruption coins first, then replacement values) is
    part of the reproducibility contract.
    """
    corrupt = rng.random((count, spec.n)) < spec.p
    values = rng.integers(1, spec.field.q, size=(count, spec.n), dtype=np.uint8)
    return np.where(corrupt, values, np.uint8(0))


def sample_noisy(spec: NoiseSpec, rng: np.random.Generator) -> Word:
    """One noisy word: each coordinate 0 w.p. 1-p, else uniform nonzero."""
    return Word(spec.field, sample_noisy_batch(spec, 1, rng)[0].tobytes())


def vector_probability(spec: NoiseSpec, w: int) -> float:
    """Probability of one fixed word of weight w under the noise model."""
    if not 0 <= w <= spec.n:
        raise ValidationError(f"weight {w} outside 0..{spec.n}")
    return float(weight_probabilities(spec.field.q, spec.n, spec.p)[w])


def weight_probabilities(q: int, n: int, p: float) -> np.ndarray:
    """Array P with P[w] = (p/(q-1))^w (1-p)^(n-w) for w = 0..n."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"corruption probability {p} outside [0, 1]")
    w = np.arange(n + 1)
    if p == 0.0:
        out = np.zeros(n + 1)
        out[0] = 1.0
        return out
    if p == 1.0:
        out = np.zeros(n + 1)
        out[n] = (1.0 / (q - 1)) ** n
        return out
    if n < _LOG_SPACE_MIN_N:
        return (p / (q - 1)) ** w * (1.0 - p) ** (n - w)
    log_p = math.log(p / (q - 1))
    log_1mp = math.log1p(-p)
    return np.exp(w * log_p + (n - w) * log_1mp)


def sample_erasure_batch(n: int, p: float, count: int,
                         rng: np.random.Generator) -> np.ndarray:
    """(count, n) matrix of erasure masks; 1 marks an erased coordinate."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"erasure probability {p} outside [0, 1]")
    return (rng.random((count, n)) < p).astype(np.uint8)


def sample_erasure_pattern(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    return sample_erasure_batch(n, p, 1, rng)[0]


def hoeffding_radius(samples: int, delta: float) -> float:
    """Half-width t/samples with t = sqrt(samples ln(1/delta) / 2).

    An empirical mean of [0,1]-valued draws deviates from the true mean
    by more than this radius with probability at most 2*delta.
    """
    if samples < 1:
        raise ValidationError("need at least one sample")
    if not 0.0 < delta < 1.0:
        raise ValidationError(f"confidence parameter {delta} outside (0, 1)")
    return math.sqrt(math.log(1.0 / delta) / (2.0 * samples))
