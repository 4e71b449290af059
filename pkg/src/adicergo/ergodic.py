"""Cylinder functions, their transforms, empirical shift averages, and the
multiplier-predicted limits, plus the desk-scale torus averages."""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .adic import AdicInt
from .basis import Basis, parse_basis
from .characters import Character, reduce_phase
from .multipliers import BudgetError, multiplier_natural, multiplier_prime
from .weyl import DEFAULT_MAX_MODULUS, orbit_histogram, torus_weyl_sum

DEFAULT_VECTOR_BUDGET = 1 << 20


@dataclass(frozen=True)
class CylinderFunction:
    """A function on the level-r quotient, stored extensionally: values[c]
    for every residue c below the cumulative modulus."""

    basis: Basis
    r: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.complex128)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.basis.modulus(self.r):
            raise ValueError("value vector length must equal the cumulative modulus")

    @property
    def modulus(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Spectrum:
    """Transform coefficients indexed by character numerator."""

    basis: Basis
    r: int
    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=np.complex128)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != self.basis.modulus(self.r):
            raise ValueError("coefficient vector length must equal the cumulative modulus")


def _check_budget(n: int, budget: int):
    if n > budget:
        raise BudgetError(f"vector length {n} exceeds budget {budget}")


def dft(f: CylinderFunction, budget: int = DEFAULT_VECTOR_BUDGET) -> Spectrum:
    """Coefficient at ell is the mean of f against the conjugate character."""
    _check_budget(f.modulus, budget)
    return Spectrum(f.basis, f.r, np.fft.fft(f.values) / f.modulus)


def idft(spec: Spectrum, budget: int = DEFAULT_VECTOR_BUDGET) -> CylinderFunction:
    n = len(spec.coefficients)
    _check_budget(n, budget)
    return CylinderFunction(spec.basis, spec.r, np.fft.ifft(spec.coefficients) * n)


def translate(f: CylinderFunction, y: int) -> CylinderFunction:
    """The function x -> f(x + y)."""
    return CylinderFunction(f.basis, f.r, np.roll(f.values, -y))


def empirical_average(f: CylinderFunction, rho: list[AdicInt], n: int, source: str,
                      max_modulus: int = DEFAULT_MAX_MODULUS) -> CylinderFunction:
    """The shift average x -> (1/total) sum over the source of f(x + rho(p)).

    Computed from the orbit histogram: a weighted sum of translates of f,
    one per occupied residue class.
    """
    hist = orbit_histogram(f.basis, f.r, rho, n, source, max_modulus)
    out = np.zeros(f.modulus, dtype=np.complex128)
    for c in np.flatnonzero(hist.counts):
        out += (hist.counts[c] / hist.total) * np.roll(f.values, -c)
    return CylinderFunction(f.basis, f.r, out)


def predicted_limit(f: CylinderFunction, rho: list[AdicInt], kind: str = "prime",
                    budget: int = DEFAULT_VECTOR_BUDGET) -> CylinderFunction:
    """Apply the limit multiplier coefficient-wise in the transform domain."""
    if kind not in ("prime", "natural"):
        raise ValueError(f"unknown multiplier kind {kind!r}")
    mult = multiplier_prime if kind == "prime" else multiplier_natural
    spec = dft(f, budget)
    factors = np.array([
        mult(reduce_phase(Character(f.basis, f.r, ell), rho)).value
        for ell in range(f.modulus)
    ])
    return idft(Spectrum(f.basis, f.r, spec.coefficients * factors), budget)


def multiplier_table(basis: Basis, r: int, rho: list[AdicInt], kind: str) -> np.ndarray:
    mult = multiplier_prime if kind == "prime" else multiplier_natural
    return np.array([
        mult(reduce_phase(Character(basis, r, ell), rho)).value
        for ell in range(basis.modulus(r))
    ])


@dataclass
class ComparisonReport:
    """Distances between the empirical averages and the predicted limit."""

    n_schedule: list[int]
    sup_distances: list[float]
    l2_distances: list[float]
    multipliers: list[complex]
    sup_nonincreasing: bool = field(init=False)

    def __post_init__(self):
        self.sup_nonincreasing = all(
            b <= a + 1e-15 for a, b in zip(self.sup_distances, self.sup_distances[1:]))


def compare(f: CylinderFunction, rho: list[AdicInt], n_schedule: list[int],
            kind: str = "prime", max_modulus: int = DEFAULT_MAX_MODULUS) -> ComparisonReport:
    """Run the empirical average over an N schedule against the predicted
    limit; sup distance enumerates every point of the quotient."""
    source = "primes" if kind == "prime" else "naturals"
    limit = predicted_limit(f, rho, kind)
    mults = multiplier_table(f.basis, f.r, rho, kind)
    sup, l2 = [], []
    for n in n_schedule:
        avg = empirical_average(f, rho, n, source, max_modulus)
        diff = avg.values - limit.values
        sup.append(float(np.max(np.abs(diff))))
        l2.append(float(np.sqrt(np.mean(np.abs(diff) ** 2))))
    return ComparisonReport(list(n_schedule), sup, l2, [complex(m) for m in mults])


def _as_tuple(v) -> tuple:
    return tuple(v) if isinstance(v, (tuple, list)) else (v,)


def torus_average(trig_coeffs: dict, beta, x, n: int, source: str = "primes") -> complex:
    """Average of a trigonometric polynomial along the polynomial orbit on a
    d-torus.

    trig_coeffs maps a frequency (int, or tuple for d > 1) to a complex
    coefficient; beta gives the orbit polynomial coefficients per torus
    component (a flat list means d = 1); x is the starting point.
    """
    first = _as_tuple(next(iter(trig_coeffs)))
    dim = len(first)
    if beta and not isinstance(beta[0], (list, tuple)):
        beta = [beta]
    if len(beta) != dim:
        raise ValueError("one coefficient list per torus component required")
    betas = [[b if isinstance(b, Fraction) else Fraction(b) for b in comp] for comp in beta]
    xs = _as_tuple(x)
    if len(xs) != dim:
        raise ValueError("starting point dimension mismatch")
    total = 0j
    for freq, coeff in trig_coeffs.items():
        m = _as_tuple(freq)
        if len(m) != dim:
            raise ValueError("mixed frequency dimensions")
        degree = max(len(comp) for comp in betas)
        eff = [sum(mi * comp[j] for mi, comp in zip(m, betas) if j < len(comp))
               for j in range(degree)]
        phase_x = sum(mi * xi for mi, xi in zip(m, xs))
        total += coeff * cmath.exp(2j * cmath.pi * phase_x) * torus_weyl_sum(eff, n, source)
    return total


def cylinder_to_dict(f: CylinderFunction) -> dict:
    return {
        "basis": f.basis.spec_string(),
        "r": f.r,
        "values": [[float(v.real), float(v.imag)] for v in f.values],
    }


def cylinder_from_dict(doc: dict) -> CylinderFunction:
    basis = parse_basis(doc["basis"])
    values = np.array([complex(re, im) for re, im in doc["values"]])
    return CylinderFunction(basis, int(doc["r"]), values)


def spectrum_to_dict(spec: Spectrum) -> dict:
    return {
        "basis": spec.basis.spec_string(),
        "r": spec.r,
        "coefficients": [[float(v.real), float(v.imag)] for v in spec.coefficients],
    }


def spectrum_from_dict(doc: dict) -> Spectrum:
    basis = parse_basis(doc["basis"])
    coeffs = np.array([complex(re, im) for re, im in doc["coefficients"]])
    return Spectrum(basis, int(doc["r"]), coeffs)
