"""Deterministic fan-out over independent tasks.

Workers only change scheduling, never results: each task owns its work
item (and any derived RNG stream), and outputs are collected in task
order, so every parallelism degree yields identical bytes.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Sequence[T], parallelism: int = 1) -> list[R]:
    if parallelism <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, items))
