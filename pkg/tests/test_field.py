import pytest

from wildcc.field import GF, minimal_polynomial


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)])
def test_field_axioms(p, e):
    gf = GF(p, e)
    elems = list(gf.elements())
    for a in elems:
        assert gf.add(a, 0) == a
        assert gf.mul(a, 1) == a
        assert gf.add(a, gf.neg(a)) == 0
        if a:
            assert gf.mul(a, gf.inv(a)) == 1
    # spot-check associativity/distributivity on a slice
    sample = elems[: min(len(elems), 6)]
    for a in sample:
        for b in sample:
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)
            for c in sample:
                left = gf.mul(a, gf.add(b, c))
                right = gf.add(gf.mul(a, b), gf.mul(a, c))
                assert left == right


def test_frobenius_and_pth_root():
    gf = GF(2, 2)
    for a in gf.elements():
        assert gf.pth_root(gf.frobenius(a)) == a
        assert gf.frobenius(gf.pth_root(a)) == a


def test_gf4_structure():
    gf = GF(2, 2)
    # the generator g (code 2) satisfies g^2 = g + 1 for the smallest modulus
    g = 2
    assert gf.mul(g, g) == gf.add(g, 1)
    assert gf.pow(g, 3) == 1


def test_embedding_is_homomorphism():
    small, big = GF(2, 2), GF(2, 4)
    t = small.embedding(big)
    for a in small.elements():
        for b in small.elements():
            assert t[small.add(a, b)] == big.add(t[a], t[b])
            assert t[small.mul(a, b)] == big.mul(t[a], t[b])


def test_minimal_polynomial_roundtrip():
    small, big = GF(2, 1), GF(2, 2)
    g = 2  # generator of GF(4), not in F_2
    mp = minimal_polynomial(g, big, small)
    # must be monic of degree 2 with root g
    assert mp[-1] == 1 and len(mp) == 3
    acc, pw = 0, 1
    for c in mp:
        acc = big.add(acc, big.mul(c, pw))
        pw = big.mul(pw, g)
    assert acc == 0
