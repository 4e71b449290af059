"""Small multiplicative-function kernel: factorization, phi, Mobius mu."""
from __future__ import annotations

import math

_factor_cache: dict[int, tuple[tuple[int, int], ...]] = {}


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as ((p, e), ...).  Cached;
    intended for moduli up to ~10^7."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    cached = _factor_cache.get(n)
    if cached is not None:
        return cached
    m = n
    out = []
    for p in range(2, math.isqrt(m) + 1):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        out.append((m, 1))
    result = tuple(out)
    if n <= 10**7:
        _factor_cache[n] = result
    return result


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def lcm_many(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out
