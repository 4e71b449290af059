import random

import pytest
from hypothesis import given, strategies as st

from adicergo.adic import (AdicInt, Digits, add_carry, add_mod, embed,
                           eval_poly, from_digits, include_in_window,
                           is_generator, mul, neg, rebase, scale, to_digits,
                           unrebase)
from adicergo.basis import parse_basis

DYADIC = parse_basis("const:2")
MIXED = parse_basis("list:2,3,5")


def test_embed_examples():
    assert embed(11, DYADIC, 2).v == 3
    assert embed(0, MIXED, 2).v == 0
    assert embed(-1, DYADIC, 2).v == 7


def test_digit_codec_examples():
    assert to_digits(AdicInt(DYADIC, 2, 3)).digits == (1, 1, 0)
    # 26 = 0 + 2*1 + 6*4 in radices (2,3,5)
    assert to_digits(AdicInt(MIXED, 2, 26)).digits == (0, 1, 4)
    assert from_digits(Digits(MIXED, 2, (0, 0, 0))).v == 0


def test_digit_out_of_range_rejected():
    with pytest.raises(ValueError, match="out of range"):
        Digits(MIXED, 2, (2, 0, 0))


def test_add_carry_examples():
    s = add_carry(Digits(DYADIC, 2, (1, 1, 0)), Digits(DYADIC, 2, (1, 0, 0)))
    assert s.digits == (0, 0, 1)
    # 29 + 1 = 30 = full modulus; final carry discarded
    s = add_carry(Digits(MIXED, 2, (1, 2, 4)), Digits(MIXED, 2, (1, 0, 0)))
    assert s.digits == (0, 0, 0)
    x = Digits(MIXED, 2, (1, 2, 3))
    assert add_carry(x, Digits(MIXED, 2, (0, 0, 0))) == x


def test_basis_mismatch_rejected():
    with pytest.raises(ValueError, match="mismatch"):
        add_mod(embed(1, DYADIC, 2), embed(1, MIXED, 2))


@given(st.integers(0, 29), st.integers(0, 29))
def test_carry_equals_modular_addition(n, m):
    x, y = AdicInt(MIXED, 2, n), AdicInt(MIXED, 2, m)
    assert from_digits(add_carry(to_digits(x), to_digits(y))) == add_mod(x, y)


@given(st.integers(0, 2**7 - 1))
def test_codec_roundtrip(v):
    x = AdicInt(DYADIC, 6, v)
    assert from_digits(to_digits(x)) == x


def test_ring_laws_random():
    rng = random.Random(7)
    b = parse_basis("cycle:2,3,5")
    a = b.modulus(4)
    for _ in range(300):
        x, y, z = (AdicInt(b, 4, rng.randrange(a)) for _ in range(3))
        assert add_mod(x, y) == add_mod(y, x)
        assert mul(x, y) == mul(y, x)
        assert add_mod(add_mod(x, y), z) == add_mod(x, add_mod(y, z))
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, add_mod(y, z)) == add_mod(mul(x, y), mul(x, z))
        assert add_mod(x, neg(x)).v == 0


def test_precision_reduction_commutes():
    rng = random.Random(11)
    b = MIXED
    for _ in range(200):
        n, m = rng.randrange(30), rng.randrange(30)
        x, y = AdicInt(b, 2, n), AdicInt(b, 2, m)
        for op in (add_mod, mul):
            assert op(x, y).reduce_to(1) == op(x.reduce_to(1), y.reduce_to(1))
        rho = [AdicInt(b, 2, rng.randrange(30)) for _ in range(3)]
        t = rng.randrange(100)
        assert eval_poly(rho, t).reduce_to(1) == eval_poly([c.reduce_to(1) for c in rho], t)


def test_embed_is_ring_homomorphism():
    rng = random.Random(13)
    for _ in range(200):
        n, m = rng.randrange(-500, 500), rng.randrange(-500, 500)
        assert embed(n + m, MIXED, 2) == add_mod(embed(n, MIXED, 2), embed(m, MIXED, 2))
        assert embed(n * m, MIXED, 2) == mul(embed(n, MIXED, 2), embed(m, MIXED, 2))


def test_eval_poly_examples():
    sq = [embed(0, DYADIC, 2), embed(0, DYADIC, 2), embed(1, DYADIC, 2)]
    assert eval_poly(sq, 3) == embed(1, DYADIC, 2)  # 9 mod 8
    ident = [embed(0, DYADIC, 2), embed(1, DYADIC, 2)]
    assert eval_poly(ident, 13) == embed(13, DYADIC, 2)
    rho = [embed(c, MIXED, 2) for c in (1, 2, 3)]
    assert eval_poly(rho, 4) == embed(27, MIXED, 2)  # 57 mod 30
    with pytest.raises(ValueError, match="empty"):
        eval_poly([], 1)


def test_scale_example():
    assert scale(5, embed(3, DYADIC, 2)) == embed(7, DYADIC, 2)


def test_is_generator():
    assert is_generator(embed(3, DYADIC, 2))
    assert not is_generator(embed(2, DYADIC, 2))
    assert is_generator(embed(1, MIXED, 2))


def test_rebase_roundtrip():
    w = parse_basis("const:2@offset:-1")
    x = from_digits(Digits(w, 1, (1, 0, 1)))
    rx = rebase(x)
    assert rx.basis.offset == 0 and rx.r == 2 and rx.v == x.v
    assert to_digits(rx).digits == (1, 0, 1)
    assert unrebase(rx, w) == x
    # identity at offset 0
    y = embed(5, DYADIC, 2)
    assert rebase(y) == y


def test_include_in_window():
    w = parse_basis("cycle:2,3,5@offset:-1")
    x = embed(7, parse_basis("cycle:2,3,5"), 2)
    lifted = include_in_window(x, w)
    assert lifted.v == 7 * 5  # digit content shifted above the offset positions
    d = to_digits(lifted)
    assert d.digits[0] == 0  # nothing below position 0
    assert to_digits(x).digits == d.digits[1:]
