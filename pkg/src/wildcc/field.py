"""Arithmetic in small finite fields GF(p^e) with integer-encoded elements.

An element of GF(p, e) is an int in [0, p^e): its base-p digits are the
coefficients of the residue polynomial in the power basis 1, g, ..., g^(e-1),
little-endian.  The modulus is the monic irreducible of degree e whose
non-leading coefficient vector has the smallest integer encoding, so every
run picks the same field model.
"""
from __future__ import annotations

from functools import lru_cache

_PRIMES = (2, 3, 5, 7, 11, 13)


def _poly_mul_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_rem_mod_p(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lead) % p
        shift = da - dm
        for k, mk in enumerate(m):
            a[shift + k] = (a[shift + k] - c * mk) % p
        while len(a) > 1 and a[-1] == 0:
            a.pop()
    return a


def _poly_pow_mod(base: list[int], exp: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_rem_mod_p(base, m, p)
    while exp:
        if exp & 1:
            result = _poly_rem_mod_p(_poly_mul_mod_p(result, base, p), m, p)
        base = _poly_rem_mod_p(_poly_mul_mod_p(base, base, p), m, p)
        exp >>= 1
    return result


def _poly_gcd_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    while any(b):
        a, b = b, _poly_rem_mod_p(a, b, p)
    return a


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """coeffs: full coefficient list of a monic polynomial over F_p."""
    e = len(coeffs) - 1
    if e == 1:
        return True
    x = [0, 1]
    # f irreducible of degree e iff x^(p^e) = x mod f and gcd(x^(p^(e/r)) - x, f) = 1
    # for every prime r | e.
    xq = _poly_pow_mod(x, p ** e, coeffs, p)
    if xq != x:
        return False
    for r in _prime_factors(e):
        xr = _poly_pow_mod(x, p ** (e // r), coeffs, p)
        diff = xr[:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        while len(diff) > 1 and diff[-1] == 0:
            diff.pop()
        g = _poly_gcd_mod_p(coeffs, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _modulus(p: int, e: int) -> tuple[int, ...]:
    for code in range(p ** e):
        coeffs = _digits(code, p, e) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")


def _digits(code: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(code % p)
        code //= p
    return out


def _undigits(digits: list[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


class GF:
    """The field GF(p^e); elements are ints in [0, p^e)."""

    def __init__(self, p: int, e: int = 1):
        if p not in _PRIMES:
            raise ValueError(f"prime {p} not supported (use one of {_PRIMES})")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e
        if e > 1:
            self.modulus = list(_modulus(p, e))
        else:
            self.modulus = [0, 1]
        self._inv_cache: dict[int, int] = {}

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    # -- basic ops -------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        da, db = _digits(a, self.p, self.e), _digits(b, self.p, self.e)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        da, db = _digits(a, self.p, self.e), _digits(b, self.p, self.e)
        return _undigits([(x - y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        da, db = _digits(a, self.p, self.e), _digits(b, self.p, self.e)
        prod = _poly_mul_mod_p(da, db, self.p)
        rem = _poly_rem_mod_p(prod, self.modulus, self.p)
        rem += [0] * (self.e - len(rem))
        return _undigits(rem, self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF")
        cached = self._inv_cache.get(a)
        if cached is None:
            cached = self.pow(a, self.q - 2)
            self._inv_cache[a] = cached
        return cached

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def from_int(self, n: int) -> int:
        """The image of the integer n under Z -> F_p c GF(p^e)."""
        return n % self.p

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        """The unique p-th root (Frobenius is bijective)."""
        return self.pow(a, self.p ** (self.e - 1)) if self.e > 1 else a

    def elements(self):
        return range(self.q)

    # -- extensions ------------------------------------------------------
    def extension(self, d: int) -> "GF":
        return GF(self.p, self.e * d)

    def embedding(self, big: "GF") -> dict[int, int]:
        """Map table GF(p^e) -> big, sending the generator to the smallest
        root of our modulus in big.  Identity map when e == 1 on digits."""
        if big.p != self.p or big.e % self.e:
            raise ValueError("not a subfield")
        return _embedding_table(self.p, self.e, big.e)


@lru_cache(maxsize=None)
def _embedding_table(p: int, e_small: int, e_big: int) -> dict[int, int]:
    small, big = GF(p, e_small), GF(p, e_big)
    if e_small == 1:
        return {a: a for a in range(p)}
    mod = small.modulus
    root = None
    for cand in range(big.q):
        acc, pw = 0, 1
        for c in mod:
            acc = big.add(acc, big.mul(c % p, pw))
            pw = big.mul(pw, cand)
        if acc == 0:
            root = cand
            break
    assert root is not None, "subfield root must exist"
    table = {}
    for a in range(small.q):
        digs = _digits(a, p, e_small)
        acc, pw = 0, 1
        for d in digs:
            acc = big.add(acc, big.mul(d, pw))
            pw = big.mul(pw, root)
        table[a] = acc
    return table


def minimal_polynomial(gamma: int, big: GF, small: GF) -> list[int]:
    """Coefficients (little-endian, monic) over `small` of the minimal
    polynomial of gamma in `big`, via the product over Frobenius conjugates."""
    emb = small.embedding(big)
    back = {v: k for k, v in emb.items()}
    conj = []
    x = gamma
    while x not in conj:
        conj.append(x)
        x = big.pow(x, small.q)
    # product of (T - c) over conjugates, computed in big
    poly = [1]
    for c in conj:
        nxt = [0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i + 1] = big.add(nxt[i + 1], a)
            nxt[i] = big.sub(nxt[i], big.mul(a, c))
        poly = nxt
    out = []
    for a in poly:
        if a not in back:
            raise ArithmeticError("minimal polynomial has a coefficient outside the base field")
        out.append(back[a])
    return out
