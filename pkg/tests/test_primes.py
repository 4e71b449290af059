import numpy as np
import pytest

from adicergo.multipliers import BudgetError
from adicergo.primes import prime_count, primes_in_range


def trial_division_primes(lo, hi):
    out = []
    for n in range(max(lo, 2), hi + 1):
        if all(n % p for p in range(2, int(n ** 0.5) + 1)):
            out.append(n)
    return out


def test_small_examples():
    assert list(primes_in_range(1, 10)) == [2, 3, 5, 7]
    assert prime_count(10) == 4
    assert prime_count(100) == 25


def test_against_trial_division():
    got = primes_in_range(500, 2000)
    assert list(got) == trial_division_primes(500, 2000)


def test_pi_of_one_million():
    assert prime_count(10**6) == 78498


def test_segment_boundaries():
    # force the segmented path and compare with the one-shot sieve
    seg = primes_in_range(2, 3 * (1 << 21) + 17)
    small = primes_in_range(2, 1 << 21)
    assert np.array_equal(seg[: len(small)], small)
    assert list(seg[-3:]) == trial_division_primes(int(seg[-3]), int(seg[-1]))


def test_ascending_and_range_respected():
    ps = primes_in_range(1000, 1100)
    assert np.all(np.diff(ps) > 0)
    assert ps[0] >= 1000 and ps[-1] <= 1100
    assert len(primes_in_range(20, 10)) == 0


def test_budget_enforced():
    with pytest.raises(BudgetError):
        primes_in_range(2, 10**7, budget=10**6)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("ADICERGO_MAX_N", "1000")
    with pytest.raises(BudgetError):
        primes_in_range(2, 2000)
    assert prime_count(1000) == 168
