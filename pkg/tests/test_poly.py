import random

import pytest

from wildcc.field import GF
from wildcc.poly import (
    INF,
    INFINITE_PLACE,
    NegativeValuation,
    Poly,
    RatFunc,
    divexact,
    factor_univariate,
    poly_gcd,
    radicial_place,
    sqrt_in_radicial,
    univ_poly,
    univ_roots,
    univ_valuation_at,
)


def rf(gf, num_terms, den_terms, nvars=2):
    return RatFunc(Poly(gf, nvars, num_terms), Poly(gf, nvars, den_terms))


def random_poly(rng, gf, nvars, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        e = tuple(rng.randrange(max_deg + 1) for _ in range(nvars))
        terms[e] = rng.randrange(1, gf.q)
    return Poly(gf, nvars, terms)


def random_ratfunc(rng, gf, nvars=2):
    num = random_poly(rng, gf, nvars)
    den = random_poly(rng, gf, nvars)
    while den.is_zero():
        den = random_poly(rng, gf, nvars)
    return RatFunc(num, den)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_field_ops_roundtrip(p):
    rng = random.Random(7 + p)
    gf = GF(p)
    for _ in range(25):
        f = random_ratfunc(rng, gf)
        g = random_ratfunc(rng, gf)
        if g.is_zero():
            continue
        assert (f * g) / g == f
        assert f + g - g == f


def test_canonical_form_equality():
    gf = GF(2)
    t1 = RatFunc.var(gf, 2, 0)
    t2 = RatFunc.var(gf, 2, 1)
    a = (t1 + t2) * (t1 * t1 + t2) / (t1 * (t1 * t1 + t2))
    b = (t1 + t2) / t1
    assert a == b
    assert hash(a) == hash(b)


def test_divisor_valuation_examples():
    gf = GF(2)
    t1 = RatFunc.var(gf, 2, 0)
    t2 = RatFunc.var(gf, 2, 1)
    f = t2 ** 3 / t1 ** 3
    assert f.axis_valuation(0) == -3
    g = (t1 + t2) / t1 ** 2
    assert g.axis_valuation(0) == -2
    assert RatFunc.zero(gf, 2).axis_valuation(0) == INF


def test_valuation_multiplicative_additive():
    rng = random.Random(11)
    gf = GF(3)
    for _ in range(40):
        f = random_ratfunc(rng, gf)
        g = random_ratfunc(rng, gf)
        if f.is_zero() or g.is_zero():
            continue
        assert (f * g).axis_valuation(0) == f.axis_valuation(0) + g.axis_valuation(0)
        s = f + g
        if not s.is_zero():
            assert s.axis_valuation(0) >= min(f.axis_valuation(0), g.axis_valuation(0))


def test_restrict_examples():
    gf = GF(2)
    t1 = RatFunc.var(gf, 2, 0)
    t2 = RatFunc.var(gf, 2, 1)
    one = RatFunc.one(gf, 2)
    assert (t2 ** 2 + t1 * t2).restrict_axis(0) == t2 ** 2
    assert (t2 / (one + t1)).restrict_axis(0) == t2
    with pytest.raises(NegativeValuation):
        (t2 / t1).restrict_axis(0)


def test_restrict_multiplicative():
    rng = random.Random(13)
    gf = GF(2)
    for _ in range(40):
        f = random_ratfunc(rng, gf)
        g = random_ratfunc(rng, gf)
        if f.axis_valuation(0) < 0 or g.axis_valuation(0) < 0:
            continue
        assert (f * g).restrict_axis(0) == f.restrict_axis(0) * g.restrict_axis(0)


def test_partials_examples():
    gf2 = GF(2)
    t1 = RatFunc.var(gf2, 2, 0)
    t2 = RatFunc.var(gf2, 2, 1)
    f = t2 ** 3 / t1 ** 3
    d1, d2 = f.partials()
    assert d1 == t2 ** 3 / t1 ** 4
    assert d2 == t2 ** 2 / t1 ** 3
    g = t1 ** 2  # p-th power
    assert g.partials() == (RatFunc.zero(gf2, 2), RatFunc.zero(gf2, 2))
    h = t1 * t2
    assert h.partials() == (t2, t1)


def test_pth_root_examples():
    gf = GF(2)
    t1 = RatFunc.var(gf, 2, 0)
    t2 = RatFunc.var(gf, 2, 1)
    assert (t1 ** 2 * t2 ** 4).pth_root() == t1 * t2 ** 2
    assert (t1 * t2).pth_root() is None
    gf3 = GF(3)
    s1 = RatFunc.var(gf3, 2, 0)
    s2 = RatFunc.var(gf3, 2, 1)
    f = (s1 + s2) ** 3 / s1 ** 3
    assert f.pth_root() == (s1 + s2) / s1


def test_pth_root_property():
    rng = random.Random(17)
    for p in (2, 3):
        gf = GF(p)
        for _ in range(20):
            f = random_ratfunc(rng, gf)
            g = f ** p
            r = g.pth_root()
            assert r is not None and r == f
            assert all(x.is_zero() for x in g.partials())


def test_point_valuation_examples():
    gf = GF(2)
    t = RatFunc.var(gf, 1, 0)
    pi = univ_poly(gf, [0, 1])  # t
    assert univ_valuation_at(t ** 2, pi) == 2
    assert univ_valuation_at(t ** 3, INFINITE_PLACE) == -3
    f = t ** 2 + t + RatFunc.one(gf, 1)
    self_place = univ_poly(gf, [1, 1, 1])
    assert univ_valuation_at(f, self_place) == 1


def test_gcd_bivariate():
    rng = random.Random(23)
    gf = GF(2)
    for _ in range(15):
        a = random_poly(rng, gf, 2)
        b = random_poly(rng, gf, 2)
        c = random_poly(rng, gf, 2)
        if a.is_zero() or b.is_zero() or c.is_zero():
            continue
        g = poly_gcd(a * c, b * c)
        # c divides the gcd
        assert divexact(g, poly_gcd(g, c)) is not None
        q = divexact(a * c, g)
        assert q * g == a * c


def test_sqrt_in_radicial():
    gf = GF(2)
    t = RatFunc.var(gf, 1, 0)
    w = RatFunc.var(gf, 1, 0)  # result variable is w with w^2 = t
    assert sqrt_in_radicial(t) == w
    assert sqrt_in_radicial(t ** 2) == w ** 2  # = t as an element of GF(q)(w)
    r = sqrt_in_radicial(t * t + t)  # t(t+1)
    assert r == w * (w + RatFunc.one(gf, 1))
    # square root squares back
    rng = random.Random(5)
    for _ in range(20):
        g = random_ratfunc(rng, gf, nvars=1)
        r = sqrt_in_radicial(g)
        gw2 = g.subs([RatFunc.var(gf, 1, 0) ** 2])
        assert r * r == gw2


def test_radicial_place():
    gf = GF(2)
    pi = univ_poly(gf, [1, 1, 1])  # t^2 + t + 1 irreducible
    tilde = radicial_place(pi)
    # tilde(w)^2 = pi(w^2)
    w2 = Poly(gf, 1, {(2,): 1})
    assert tilde * tilde == pi.subs_poly([w2])


def test_factor_univariate():
    gf = GF(2)
    t = Poly.var(gf, 1, 0)
    one = Poly.constant(gf, 1, 1)
    f = t * (t + one) ** 2 * (t * t + t + one)
    fac = factor_univariate(f)
    assert sorted((g.degree(0), m) for g, m in fac) == [(1, 1), (1, 2), (2, 1)]
    prod = Poly.constant(gf, 1, 1)
    for g, m in fac:
        prod = prod * g ** m
    assert prod == f
    assert univ_roots(f) == [0, 1]


def test_factor_univariate_gf4():
    gf = GF(2, 2)
    # t^2 + t + 1 splits over GF(4) into (t+g)(t+g^2)
    f = univ_poly(gf, [1, 1, 1])
    fac = factor_univariate(f)
    assert [g.degree(0) for g, _ in fac] == [1, 1]
