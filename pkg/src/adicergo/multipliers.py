"""Limit multipliers of the averaged orbits: prime and natural variants,
complete exponential sums, and the energy-decay diagnostic."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .adic import AdicInt
from .basis import Basis
from .characters import Character, ReducedPhase, reduce_phase

# int64 Horner is safe while modulus**2 stays below 2**63
_VECTOR_MODULUS_LIMIT = 3_000_000_000

DEFAULT_WIENER_BUDGET = 2**16


class BudgetError(RuntimeError):
    """A configured work budget would be exceeded."""


@dataclass(frozen=True)
class MultiplierValue:
    value: complex
    modulus: int
    kind: str  # "prime" | "natural"


def _phase_values(coeffs: tuple[int, ...], modulus: int, residues: np.ndarray) -> np.ndarray:
    """Polynomial phase numerators mod modulus for an int64 residue vector."""
    acc = np.zeros_like(residues)
    for g in reversed(coeffs):
        acc = (acc * residues + g) % modulus
    return (acc * residues) % modulus


def _phase_sum(phase: ReducedPhase, residues) -> complex:
    """Sum of e(phase(m)/D) over the given residues, deterministic pairwise."""
    d = phase.modulus
    if d <= _VECTOR_MODULUS_LIMIT:
        res = np.asarray(residues, dtype=np.int64)
        nums = _phase_values(phase.coeffs, d, res)
        return complex(np.sum(np.exp(2j * np.pi * nums / d)))
    terms = [cmath.exp(2j * cmath.pi * (phase.phase_numerator(m) / d)) for m in residues]
    return _pairwise(terms)


def _pairwise(terms: list[complex]) -> complex:
    if not terms:
        return 0j
    while len(terms) > 1:
        it = iter(terms)
        terms = [a + b for a, b in zip(it, it)] + ([terms[-1]] if len(terms) % 2 else [])
    return terms[0]


def _constant_factor(phase: ReducedPhase) -> complex:
    c = phase.constant
    return cmath.exp(2j * cmath.pi * (c.numerator % c.denominator) / c.denominator)


def multiplier_prime(phase: ReducedPhase) -> MultiplierValue:
    """Average of e(phase(m)/D) over the reduced residues mod D, times the
    constant phase.  This is the limit of the prime-indexed averages."""
    d = phase.modulus
    if d == 1:
        return MultiplierValue(_constant_factor(phase), 1, "prime")
    if d <= _VECTOR_MODULUS_LIMIT:
        m = np.arange(1, d + 1, dtype=np.int64)
        units = m[np.gcd(m, d) == 1]
        s = complex(np.sum(np.exp(2j * np.pi * _phase_values(phase.coeffs, d, units) / d)))
        count = len(units)
    else:
        units = [m for m in range(1, d + 1) if math.gcd(m, d) == 1]
        s = _phase_sum(phase, units)
        count = len(units)
    return MultiplierValue(_constant_factor(phase) * s / count, d, "prime")


def multiplier_natural(phase: ReducedPhase) -> MultiplierValue:
    """Average of e(phase(m)/D) over the full residue range mod D, times the
    constant phase.  This is the limit of the natural-indexed averages."""
    d = phase.modulus
    if d == 1:
        return MultiplierValue(_constant_factor(phase), 1, "natural")
    s = _phase_sum(phase, range(1, d + 1))
    return MultiplierValue(_constant_factor(phase) * s / d, d, "natural")


def complete_exp_sum(psi_coeffs: list[int], q: int) -> complex:
    """Sum over r in [0, q) of e(2*pi*i*psi(r)/q) for
    psi(x) = a_1 x + ... + a_d x^d, evaluated in exact integer arithmetic."""
    if q < 1:
        raise ValueError("modulus must be >= 1")
    if q <= _VECTOR_MODULUS_LIMIT:
        res = np.arange(q, dtype=np.int64)
        coeffs = tuple(a % q for a in psi_coeffs)
        nums = _phase_values(coeffs, q, res)
        return complex(np.sum(np.exp(2j * np.pi * nums / q)))
    terms = []
    for r in range(q):
        acc = 0
        for a in reversed(psi_coeffs):
            acc = (acc * r + a) % q
        terms.append(cmath.exp(2j * cmath.pi * ((acc * r) % q) / q))
    return _pairwise(terms)


def wiener_energy(basis: Basis, rho: list[AdicInt], r_max: int, kind: str = "prime",
                  budget: int = DEFAULT_WIENER_BUDGET) -> list[tuple[int, float]]:
    """Mean squared multiplier magnitude over all characters of each level.

    For each r <= r_max, enumerates every numerator below the cumulative
    modulus (which covers all characters of level <= r exactly once as
    fractions) and averages |multiplier|^2.  Returns [(r, W_r), ...].
    """
    if kind not in ("prime", "natural"):
        raise ValueError(f"unknown multiplier kind {kind!r}")
    mult = multiplier_prime if kind == "prime" else multiplier_natural
    out = []
    for r in range(basis.offset, r_max + 1):
        a = basis.modulus(r)
        if a > budget:
            raise BudgetError(f"level {r} needs {a} character evaluations (budget {budget})")
        coeffs = [c if c.r == r else c.reduce_to(r) if c.r > r else None for c in rho]
        if any(c is None for c in coeffs):
            raise ValueError("coefficient precision below r_max")
        energy = 0.0
        for ell in range(a):
            phase = reduce_phase(Character(basis, r, ell), coeffs)
            energy += abs(mult(phase).value) ** 2
        out.append((r, energy / a))
    return out
