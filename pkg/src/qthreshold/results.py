"""Result containers returned by checkers and verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"
PRECONDITION_UNMET = "precondition-unmet"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive or sampled check, with an optional witness."""

    status: str
    witness: Any = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


@dataclass(frozen=True)
class Moments:
    """Exact expectations of an indicator and its boundary functional."""

    ef: float
    eh: float
    esqrt_h: float


@dataclass(frozen=True)
class DeltaBoundReport:
    delta: int | None
    bound: float
    holds: bool
    vacuous: bool


@dataclass(frozen=True)
class GBoundReport:
    p0: float
    p1: float
    lhs: float
    rhs: float
    mode: str
    status: str          # holds | violated | precondition-unmet

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


@dataclass(frozen=True)
class MainBoundReport:
    p: float
    list_size: int
    delta: float
    radius: int
    p_mid: float                 # p shifted by n^(-1/4)
    p_shifted: float             # p_mid further shifted by delta
    success_at_shifted: float
    bound: float
    status: str                  # holds | violated | precondition-unmet
    failed_premise: str | None
    vacuous: bool
    ml_success_at_mid: float | None = None
    list_success_at_mid: float | None = None
    half_inverse_list: float | None = None   # 1/(2L)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def intermediates_hold(self) -> bool:
        """ML success dominates the randomized-list decoder, which clears
        1/(2L), both computed exactly at the n^(-1/4)-shifted noise rate."""
        if self.ml_success_at_mid is None or self.list_success_at_mid is None:
            return False
        tol = 1e-12
        return (self.ml_success_at_mid >= self.list_success_at_mid - tol
                and self.list_success_at_mid >= self.half_inverse_list - tol)


@dataclass(frozen=True)
class AmbiguityEstimate:
    p: float
    value: float
    mode: str            # exact | mc
    half_width: float
    samples: int | None


@dataclass(frozen=True)
class FailureRow:
    p: float
    error_prob: float
    lower_bound: float
    holds: bool


@dataclass(frozen=True)
class VerifyEntry:
    """One line of the verification report emitted by the CLI."""

    verifier: str
    instance: str
    verdict: str
    margin: float | None = None
    witness: dict | None = None
