"""Prime generation: segmented sieve with exact counts."""
from __future__ import annotations

import math
import os

import numpy as np

from .multipliers import BudgetError

_SEGMENT = 1 << 21


def sieve_budget() -> int:
    """Upper bound on sieve ranges; override with ADICERGO_MAX_N."""
    return int(os.environ.get("ADICERGO_MAX_N", 10**8))


def _small_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_in_range(lo: int, hi: int, budget: int | None = None) -> np.ndarray:
    """All primes in [lo, hi], ascending.  Segmented, exact."""
    if budget is None:
        budget = sieve_budget()
    if hi > budget:
        raise BudgetError(f"sieve bound {hi} exceeds budget {budget}")
    lo = max(lo, 2)
    if hi < lo:
        return np.array([], dtype=np.int64)
    if hi <= _SEGMENT:
        primes = _small_sieve(hi)
        return primes[primes >= lo]
    base = _small_sieve(math.isqrt(hi))
    chunks = []
    for start in range(lo, hi + 1, _SEGMENT):
        end = min(start + _SEGMENT - 1, hi)
        flags = np.ones(end - start + 1, dtype=bool)
        for p in base:
            first = max(p * p, ((start + p - 1) // p) * p)
            if first > end:
                continue
            flags[first - start:: p] = False
        if start <= 1:
            flags[: 2 - start] = False
        chunks.append(np.flatnonzero(flags).astype(np.int64) + start)
    return np.concatenate(chunks) if chunks else np.array([], dtype=np.int64)


def prime_count(n: int, budget: int | None = None) -> int:
    return len(primes_in_range(2, n, budget))
