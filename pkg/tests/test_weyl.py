import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from adicergo.adic import embed, eval_poly
from adicergo.basis import parse_basis
from adicergo.characters import Character, char_value, reduce_phase
from adicergo.multipliers import BudgetError, multiplier_natural
from adicergo.primes import primes_in_range
from adicergo.weyl import (adic_weyl_sum, orbit_histogram, torus_weyl_sum,
                           weyl_sum_from_histogram)

DYADIC = parse_basis("const:2")
CYCLE = parse_basis("cycle:2,3,5")


def square(basis, r):
    return [embed(c, basis, r) for c in (0, 0, 1)]


def e(num, den):
    return cmath.exp(2j * cmath.pi * num / den)


def test_histogram_prime_example():
    hist = orbit_histogram(DYADIC, 2, square(DYADIC, 2), 10, "primes")
    expected = np.zeros(8, dtype=int)
    expected[4] = 1  # p = 2
    expected[1] = 3  # p = 3, 5, 7
    assert np.array_equal(hist.counts, expected)
    assert hist.total == 4


def test_histogram_uniform_naturals():
    ident = [embed(0, CYCLE, 2), embed(1, CYCLE, 2)]
    n = CYCLE.modulus(2)
    hist = orbit_histogram(CYCLE, 2, ident, n, "naturals")
    assert np.all(hist.counts == 1)
    assert hist.total == n


def test_histogram_totals():
    for source, total in (("primes", 25), ("naturals", 100)):
        hist = orbit_histogram(DYADIC, 2, square(DYADIC, 2), 100, source)
        assert hist.counts.sum() == hist.total == total


def test_histogram_budget_and_errors():
    with pytest.raises(BudgetError):
        orbit_histogram(DYADIC, 25, square(DYADIC, 25), 10, "primes", max_modulus=2**10)
    with pytest.raises(ValueError, match="source"):
        orbit_histogram(DYADIC, 2, square(DYADIC, 2), 10, "everything")
    with pytest.raises(ValueError, match="no primes"):
        orbit_histogram(DYADIC, 2, square(DYADIC, 2), 1, "primes")


def test_weyl_sum_prime_example():
    chi = Character(DYADIC, 2, 1)
    s = adic_weyl_sum(chi, square(DYADIC, 2), 10, "primes")
    assert s == pytest.approx((e(4, 8) + 3 * e(1, 8)) / 4)


def test_trivial_character_sums_to_one():
    chi = Character(CYCLE, 2, 0)
    for source in ("primes", "naturals"):
        assert adic_weyl_sum(chi, square(CYCLE, 2), 50, source) == pytest.approx(1)


def test_histogram_matches_naive_sum():
    rho = [embed(c, CYCLE, 2) for c in (1, 2, 0, 3)]
    for source in ("primes", "naturals"):
        ns = primes_in_range(2, 10**4) if source == "primes" else range(1, 10**4 + 1)
        for ell in (1, 7, 13):
            chi = Character(CYCLE, 2, ell)
            naive = sum(char_value(chi, eval_poly(rho, int(n)).v) for n in ns) / len(ns)
            fast = adic_weyl_sum(chi, rho, 10**4, source)
            assert abs(fast - naive) < 1e-12


def test_weyl_sum_bounded():
    for ell in range(CYCLE.modulus(2)):
        s = adic_weyl_sum(Character(CYCLE, 2, ell), square(CYCLE, 2), 500, "primes")
        assert abs(s) <= 1 + 1e-12


def test_natural_sum_exact_at_full_periods():
    rho = [embed(c, CYCLE, 2) for c in (2, 1, 1)]
    for ell in range(CYCLE.modulus(2)):
        chi = Character(CYCLE, 2, ell)
        ph = reduce_phase(chi, rho)
        n = 24 * ph.modulus
        s = adic_weyl_sum(chi, rho, n, "naturals")
        assert abs(s - multiplier_natural(ph).value) < 1e-10


def test_histogram_mismatch_rejected():
    hist = orbit_histogram(DYADIC, 2, square(DYADIC, 2), 10, "primes")
    with pytest.raises(ValueError, match="match"):
        weyl_sum_from_histogram(Character(CYCLE, 2, 1), hist)


def test_torus_integer_coefficients():
    assert torus_weyl_sum([0.0, 2.0, 3.0], 200, "naturals") == pytest.approx(1)
    assert torus_weyl_sum([0.5], 100, "primes") == pytest.approx(-1)


def test_torus_sum_decays_for_quadratic_irrational():
    beta = [0.0, 0.0, math.sqrt(2)]
    mags = [abs(torus_weyl_sum(beta, n, "primes")) for n in (10**3, 10**4, 10**5)]
    assert mags[0] > mags[1] > mags[2]
    assert mags[2] < 0.05


def test_torus_phases_are_exact_dyadics():
    # a pure dyadic coefficient gives an exactly periodic phase
    s = torus_weyl_sum([0.0, Fraction(1, 4)], 8, "naturals")
    expected = sum(cmath.exp(2j * cmath.pi * (n / 4 % 1)) for n in range(1, 9)) / 8
    assert s == pytest.approx(expected, abs=1e-15)
