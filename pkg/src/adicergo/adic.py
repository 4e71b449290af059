"""Truncated a-adic arithmetic: residues, the digit codec, carry addition."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .basis import Basis


@dataclass(frozen=True)
class AdicInt:
    """An element of the truncated ring, stored as a residue.

    Digits are indexed basis.offset..r; the residue v satisfies
    0 <= v < basis.modulus(r).  The digit list is a codec on top of v,
    not the canonical storage.
    """

    basis: Basis
    r: int
    v: int

    def __post_init__(self):
        if not 0 <= self.v < self.basis.modulus(self.r):
            raise ValueError(f"residue {self.v} out of range for precision {self.r}")

    @property
    def modulus(self) -> int:
        return self.basis.modulus(self.r)

    def reduce_to(self, s: int) -> "AdicInt":
        """Drop digits above index s (s <= r)."""
        if s > self.r:
            raise ValueError(f"cannot raise precision {self.r} to {s}")
        return AdicInt(self.basis, s, self.v % self.basis.modulus(s))


@dataclass(frozen=True)
class Digits:
    """Mixed-radix digit expansion, least-significant digit first."""

    basis: Basis
    r: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if len(self.digits) != self.basis.digit_count(self.r):
            raise ValueError("digit count does not match precision")
        for pos, d in enumerate(self.digits):
            i = self.basis.offset + pos
            if not 0 <= d < self.basis.a(i):
                raise ValueError(f"digit {d} out of range [0, {self.basis.a(i)}) at index {i}")


def embed(n: int, basis: Basis, r: int) -> AdicInt:
    """The integer n as a truncated element: its residue mod modulus(r)."""
    return AdicInt(basis, r, n % basis.modulus(r))


def to_digits(x: AdicInt) -> Digits:
    v = x.v
    out = []
    for i in range(x.basis.offset, x.r + 1):
        a = x.basis.a(i)
        out.append(v % a)
        v //= a
    return Digits(x.basis, x.r, tuple(out))


def from_digits(d: Digits) -> AdicInt:
    v = 0
    weight = 1
    for pos, digit in enumerate(d.digits):
        v += digit * weight
        weight *= d.basis.a(d.basis.offset + pos)
    return AdicInt(d.basis, d.r, v)


def _check_same(x, y):
    if x.basis != y.basis or x.r != y.r:
        raise ValueError("basis/precision mismatch")


def add_carry(x: Digits, y: Digits) -> Digits:
    """Digitwise addition with carry propagation; the carry out of the top
    digit is discarded (truncation to precision r)."""
    _check_same(x, y)
    out = []
    t = 0
    for pos in range(len(x.digits)):
        a = x.basis.a(x.basis.offset + pos)
        s = x.digits[pos] + y.digits[pos] + t
        out.append(s % a)
        t = s // a
    return Digits(x.basis, x.r, tuple(out))


def add_mod(x: AdicInt, y: AdicInt) -> AdicInt:
    _check_same(x, y)
    return AdicInt(x.basis, x.r, (x.v + y.v) % x.modulus)


def mul(x: AdicInt, y: AdicInt) -> AdicInt:
    _check_same(x, y)
    return AdicInt(x.basis, x.r, (x.v * y.v) % x.modulus)


def neg(x: AdicInt) -> AdicInt:
    return AdicInt(x.basis, x.r, (-x.v) % x.modulus)


def scale(n: int, x: AdicInt) -> AdicInt:
    return AdicInt(x.basis, x.r, (n * x.v) % x.modulus)


def eval_poly(rho: list[AdicInt], n: int) -> AdicInt:
    """Evaluate rho[0] + rho[1]*n + ... + rho[k]*n^k by Horner's rule,
    entirely in residues."""
    if not rho:
        raise ValueError("empty coefficient list")
    for c in rho[1:]:
        _check_same(rho[0], c)
    m = rho[0].modulus
    t = n % m
    acc = 0
    for c in reversed(rho):
        acc = (acc * t + c.v) % m
    return AdicInt(rho[0].basis, rho[0].r, acc)


def is_generator(x: AdicInt) -> bool:
    """Unit test at working precision: gcd(v, modulus) == 1.  This is the
    truncation of the topological-generator condition (x generates iff its
    residue is a unit at every precision)."""
    return math.gcd(x.v, x.modulus) == 1


def rebase(x: AdicInt) -> AdicInt:
    """Reindex a window element so digits start at position 0.

    Pure relabeling: the residue is unchanged, the basis entries shift by
    the window offset.
    """
    b = x.basis.rebased()
    return AdicInt(b, x.r - x.basis.offset, x.v)


def unrebase(x: AdicInt, window: Basis) -> AdicInt:
    """Inverse of :func:`rebase` for the given window basis."""
    if x.basis != window.rebased() or x.basis.offset != 0:
        raise ValueError("element is not a rebase of the given window")
    return AdicInt(window, x.r + window.offset, x.v)


def include_in_window(x: AdicInt, window: Basis) -> AdicInt:
    """Embed an offset-0 element into a window as the element with the same
    nonnegative digits and zero digits below position 0."""
    if window.nonnegative_part() != x.basis:
        raise ValueError("window does not extend the element's basis")
    return AdicInt(window, x.r, x.v * window.window_factor())
