"""Witt vectors of fixed length s over rational-function fields.

Components are stored low-weight-first: comps[i] is the component whose
t-adic order enters the filtration with weight p^i.  In classical Witt
coordinates (x_0, ..., x_{s-1}) (ghost w_n = sum p^i x_i^(p^(n-i))) this
means comps[i] = x_{s-1-i}; the sum/negation tables below are computed in
classical coordinates by the integral ghost recursion and reduced mod p.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .field import GF
from .poly import INF, Poly, RatFunc

# Integral universal polynomials blow up combinatorially; this cap keeps the
# supported (p, s) range to desk scale.
_TERM_CAP = 300_000


class WittTableTooLarge(ValueError):
    pass


# -- integer polynomial helpers (exponent-tuple dicts over Z) ---------------

def _zp_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _zp_scale(a, k):
    if k == 0:
        return {}
    return {e: c * k for e, c in a.items()}


def _zp_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    if len(out) > _TERM_CAP:
        raise WittTableTooLarge("universal Witt polynomial too large")
    return out


def _zp_pow(a, n):
    nv = len(next(iter(a))) if a else 0
    result = {(0,) * nv: 1} if a else {}
    if not a:
        return {} if n else result
    base = a
    while n:
        if n & 1:
            result = _zp_mul(result, base)
        base = _zp_mul(base, base) if n > 1 else base
        n >>= 1
    return result


def _zp_divexact(a, k):
    out = {}
    for e, c in a.items():
        assert c % k == 0, "ghost recursion division must be exact"
        out[e] = c // k
    return out


def _ghost(vars_: list[dict], n: int, p: int):
    """w_n(v_0..v_n) = sum p^i v_i^(p^(n-i)) for variable polynomials."""
    acc = {}
    for i in range(n + 1):
        acc = _zp_add(acc, _zp_scale(_zp_pow(vars_[i], p ** (n - i)), p ** i))
    return acc


@lru_cache(maxsize=None)
def witt_sum_tables(p: int, s: int) -> tuple:
    """Integral sum polynomials S_0..S_{s-1} in classical coordinates.

    Variables: exponent tuples of length 2s, X_j at slot j, Y_j at slot s+j.
    """
    nv = 2 * s
    X = [{tuple(1 if k == j else 0 for k in range(nv)): 1} for j in range(s)]
    Y = [{tuple(1 if k == s + j else 0 for k in range(nv)): 1} for j in range(s)]
    S = []
    for n in range(s):
        acc = _zp_add(_ghost(X, n, p), _ghost(Y, n, p))
        for i in range(n):
            acc = _zp_add(acc, _zp_scale(_zp_pow(S[i], p ** (n - i)), -(p ** i)))
        S.append(_zp_divexact(acc, p ** n))
    return tuple(S)


@lru_cache(maxsize=None)
def witt_neg_tables(p: int, s: int) -> tuple:
    """Integral negation polynomials N_0..N_{s-1}, w_n(N) = -w_n(X)."""
    nv = s
    X = [{tuple(1 if k == j else 0 for k in range(nv)): 1} for j in range(s)]
    N = []
    for n in range(s):
        acc = _zp_scale(_ghost(X, n, p), -1)
        for i in range(n):
            acc = _zp_add(acc, _zp_scale(_zp_pow(N[i], p ** (n - i)), -(p ** i)))
        N.append(_zp_divexact(acc, p ** n))
    return tuple(N)


@lru_cache(maxsize=None)
def _sum_tables_mod_p(p: int, s: int) -> tuple:
    return tuple(
        {e: c % p for e, c in table.items() if c % p} for table in witt_sum_tables(p, s)
    )


@lru_cache(maxsize=None)
def _neg_tables_mod_p(p: int, s: int) -> tuple:
    return tuple(
        {e: c % p for e, c in table.items() if c % p} for table in witt_neg_tables(p, s)
    )


def _eval_table(table: dict, args: list[RatFunc], gf: GF) -> RatFunc:
    nv = len(args)
    power_cache: list[dict[int, RatFunc]] = [dict() for _ in range(nv)]

    def powed(i: int, k: int) -> RatFunc:
        got = power_cache[i].get(k)
        if got is None:
            got = args[i] ** k
            power_cache[i][k] = got
        return got

    acc = RatFunc.zero(gf, args[0].nvars)
    for e, c in sorted(table.items()):
        term = RatFunc.constant(gf, args[0].nvars, gf.from_int(c))
        for i, k in enumerate(e):
            if k:
                term = term * powed(i, k)
        acc = acc + term
    return acc


@dataclass(frozen=True)
class WittVec:
    """comps[i] has filtration weight p^i (classical x_{s-1-i})."""

    comps: tuple[RatFunc, ...]

    def __post_init__(self):
        assert self.comps

    @property
    def s(self) -> int:
        return len(self.comps)

    @property
    def gf(self) -> GF:
        return self.comps[0].gf

    @property
    def nvars(self) -> int:
        return self.comps[0].nvars

    @staticmethod
    def zero(gf: GF, nvars: int, s: int) -> "WittVec":
        return WittVec(tuple(RatFunc.zero(gf, nvars) for _ in range(s)))

    @staticmethod
    def from_components(comps) -> "WittVec":
        return WittVec(tuple(comps))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def classical(self) -> list[RatFunc]:
        return list(reversed(self.comps))

    @staticmethod
    def from_classical(xs) -> "WittVec":
        return WittVec(tuple(reversed(list(xs))))

    def map(self, fn) -> "WittVec":
        return WittVec(tuple(fn(c) for c in self.comps))

    def subs(self, images: list[RatFunc]) -> "WittVec":
        return self.map(lambda c: c.subs(images))

    def render(self, names: list[str]) -> str:
        return "[" + ", ".join(c.render(names) for c in self.comps) + "]"


def witt_add(a: WittVec, b: WittVec) -> WittVec:
    assert a.s == b.s and a.gf == b.gf
    gf = a.gf
    s = a.s
    tables = _sum_tables_mod_p(gf.p, s)
    xa = a.classical()
    xb = b.classical()
    args = xa + xb
    out_classical = [_eval_table(tables[n], args, gf) for n in range(s)]
    return WittVec.from_classical(out_classical)


def witt_neg(a: WittVec) -> WittVec:
    gf = a.gf
    s = a.s
    if gf.p != 2:
        return a.map(lambda c: -c)
    tables = _neg_tables_mod_p(gf.p, s)
    xa = a.classical()
    out_classical = [_eval_table(tables[n], xa, gf) for n in range(s)]
    return WittVec.from_classical(out_classical)


def witt_sub(a: WittVec, b: WittVec) -> WittVec:
    return witt_add(a, witt_neg(b))


def frobenius(a: WittVec) -> WittVec:
    return a.map(lambda c: c.frobenius())


def verschiebung(a: WittVec) -> WittVec:
    """Fixed-length V: drops the weight-1 component, shifts weights down by
    one factor of p, zero in the top slot.  F(V(a)) = V(F(a)) = p*a."""
    zero = RatFunc.zero(a.gf, a.nvars)
    return WittVec(tuple(a.comps[1:]) + (zero,))


def p_mult(a: WittVec) -> WittVec:
    return frobenius(verschiebung(a))


def teichmueller(f: RatFunc, s: int) -> WittVec:
    comps = [RatFunc.zero(f.gf, f.nvars) for _ in range(s)]
    comps[s - 1] = f
    return WittVec(tuple(comps))


def witt_order(a: WittVec, axis: int) -> float:
    """min_i p^i * ord_axis(comps[i]); INF for the zero vector."""
    p = a.gf.p
    return min((p ** i) * c.axis_valuation(axis) for i, c in enumerate(a.comps))


def in_fil(a: WittVec, n: int, axis: int) -> bool:
    return witt_order(a, axis) >= -n


def in_fil_prime(a: WittVec, m: int, axis: int) -> bool:
    """Membership in fil'_m along the axis (Matsuda filtration).

    With s' = min(ord_p(m), s): components of weight p^i with i < s' may go
    down to order -m, components with i >= s' only to -(m-1).
    """
    assert m >= 1
    p = a.gf.p
    s = a.s
    sp = min(_ord_p(m, p), s)
    for i, c in enumerate(a.comps):
        bound = -m if i < sp else -(m - 1)
        if (p ** i) * c.axis_valuation(axis) < bound:
            return False
    return True


def _ord_p(m: int, p: int) -> int:
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def fsd(a: WittVec) -> tuple[RatFunc, ...]:
    """-F^(s-1)d: coefficients of (dt_0, ..., dt_{nvars-1}) of
    -sum_i comps[i]^(p^i - 1) d(comps[i])."""
    gf = a.gf
    nv = a.nvars
    p = gf.p
    out = [RatFunc.zero(gf, nv) for _ in range(nv)]
    for i, c in enumerate(a.comps):
        if c.is_zero():
            continue
        factor = c ** (p ** i - 1)
        for v, dcv in enumerate(c.partials()):
            out[v] = out[v] - factor * dcv
    return tuple(out)


# -- small-constant encoding (for tests against Z/p^s) ----------------------

def witt_from_int(gf: GF, nvars: int, s: int, n: int) -> WittVec:
    """The image of the integer n in W_s(F_p) = Z/p^s, inside W_s(K)."""
    one = teichmueller(RatFunc.one(gf, nvars), s)
    acc = WittVec.zero(gf, nvars, s)
    n %= gf.p ** s
    for _ in range(n):
        acc = witt_add(acc, one)
    return acc
