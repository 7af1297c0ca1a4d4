"""Valuations, subring predicates, canonical factorization, approximation."""

import random

import pytest

from conicforms.basefields import GF, QQ, FieldError, QuadraticExtension
from conicforms.ratfunc import RationalFunctionField, ZeroInputError


def QQu():
    return RationalFunctionField(QQ, "u")


def GF7u():
    return RationalFunctionField(GF(7), "u")


def test_val0_examples():
    R = QQu()
    u = R.gen()
    assert R.val0(u) == 1
    assert R.val0(u - R.one()) == 0
    assert R.val0((u * u - R.one()) / u) == -1
    with pytest.raises(ZeroInputError):
        R.val0(R.zero())


def test_val_inf_examples():
    R = QQu()
    u = R.gen()
    assert R.val_inf(u - R.one()) == -1
    assert R.val_inf(u.inv()) == 1
    assert R.val_inf((u * u - R.one()) / u) == -1
    with pytest.raises(ZeroInputError):
        R.val_inf(R.zero())


def test_is_unit_os_examples():
    R = QQu()
    u = R.gen()
    assert R.is_unit_os((u + R.one()) / (u - R.one()))
    assert not R.is_unit_os(u)
    assert not R.is_unit_os(R.zero())


def test_canonical_factor_examples():
    R = QQu()
    u = R.gen()
    one = R.one()

    p, k, a = R.canonical_factor(u - one)
    assert (p, k, a) == (one, 1, 0)

    p, k, a = R.canonical_factor(u)
    assert (p, k, a) == (one, 0, 1)

    f = (u * u - one) / u
    p, k, a = R.canonical_factor(f)
    assert k == 2 and a == -1
    assert p == (u + one) / (u - one)
    assert R.is_unit_os(p)
    assert p * R.u_minus_1() ** k * u ** a == f


def test_canonical_factor_roundtrip_random():
    for R, seed in ((GF7u(), 7001), (QQu(), 7002)):
        rng = random.Random(seed)
        for _ in range(200):
            f = R.rand(rng, deg=3, height=10, nonzero=True)
            p, k, a = R.canonical_factor(f)
            assert R.is_unit_os(p)
            assert p * R.u_minus_1() ** k * R.gen() ** a == f


def test_laurent_approximate_examples():
    R = QQu()
    u = R.gen()
    # already in O_S with positive valuation at infinity
    f = (u - R.one()).inv()
    assert R.laurent_approximate(f) == R.zero()
    # Laurent polynomials are returned unchanged
    assert R.laurent_approximate(u.inv()) == u.inv()
    # principal part at infinity only
    f = u / (u - R.one())
    lam = R.laurent_approximate(f)
    assert lam == R.one()
    g = f - lam
    assert R.val0(g) == 0 and R.val_inf(g) == 1


def test_laurent_approximate_random():
    for R, seed in ((GF7u(), 911), (QQu(), 912)):
        rng = random.Random(seed)
        for _ in range(200):
            f = R.rand(rng, deg=3, height=8, nonzero=True)
            lam = R.laurent_approximate(f)
            assert R.in_ov(lam)
            g = f - lam
            assert g.is_zero() or (R.val0(g) >= 0 and R.val_inf(g) > 0)


def test_valuations_multiplicative_and_ultrametric():
    for R, seed in ((GF7u(), 31), (QQu(), 32)):
        rng = random.Random(seed)
        for _ in range(120):
            f = R.rand(rng, deg=3, height=6, nonzero=True)
            g = R.rand(rng, deg=3, height=6, nonzero=True)
            assert R.val0(f * g) == R.val0(f) + R.val0(g)
            assert R.val_inf(f * g) == R.val_inf(f) + R.val_inf(g)
            s = f + g
            if not s.is_zero():
                assert R.val0(s) >= min(R.val0(f), R.val0(g))
                assert R.val_inf(s) >= min(R.val_inf(f), R.val_inf(g))
                if R.val0(f) != R.val0(g):
                    assert R.val0(s) == min(R.val0(f), R.val0(g))
                if R.val_inf(f) != R.val_inf(g):
                    assert R.val_inf(s) == min(R.val_inf(f), R.val_inf(g))


def test_in_ov_membership():
    R = QQu()
    u = R.gen()
    assert R.in_ov(u ** 3 + u.inv() ** 2)
    assert not R.in_ov((u + R.one()).inv())
    assert R.in_ov(R.zero())


def test_quadratic_extension_automorphism_fixes_base_only():
    rng = random.Random(5)
    K = QuadraticExtension(QQ, QQ.from_int(0), QQ.from_int(1), "i")  # i^2 = -1
    for _ in range(50):
        x = K.rand(rng, 10)
        fixed = K.eq(K.conj(x), x)
        assert fixed == K.in_base(x)
    # conj is an automorphism of order two
    for _ in range(30):
        x, y = K.rand(rng, 5), K.rand(rng, 5)
        assert K.eq(K.conj(K.conj(x)), x)
        assert K.eq(K.conj(K.mul(x, y)), K.mul(K.conj(x), K.conj(y)))


def test_quadratic_extension_rejects_inseparable():
    F2 = GF(2)
    with pytest.raises(FieldError):
        QuadraticExtension(F2, F2.zero, F2.one)  # x^2 + 1 over GF(2)
    # Artin-Schreier shape is fine: x^2 + x + 1
    K4 = QuadraticExtension(F2, F2.one, F2.one)
    assert K4.characteristic == 2
    with pytest.raises(FieldError):
        QuadraticExtension(QQ, QQ.from_int(2), QQ.from_int(1))  # (x-1)^2


def test_fraction_field_tower_gf2_t():
    from conicforms.basefields import FractionField
    F = FractionField(GF(2), "t")
    R = RationalFunctionField(F, "u")
    rng = random.Random(99)
    for _ in range(60):
        f = R.rand(rng, deg=2, nonzero=True)
        g = R.rand(rng, deg=2, nonzero=True)
        assert R.val0(f * g) == R.val0(f) + R.val0(g)
        p, k, a = R.canonical_factor(f)
        assert p * R.u_minus_1() ** k * R.gen() ** a == f
