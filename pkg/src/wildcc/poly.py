"""Sparse multivariate polynomials and exact rational functions over GF(p^e).

Polynomials are exponent-tuple -> coefficient-code dicts.  Rational functions
are kept in a canonical form (gcd-reduced, denominator monic under graded-lex)
so equality is syntactic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .field import GF

INF = float("inf")


def _glex_key(exps: tuple[int, ...]):
    return (sum(exps),) + exps


class Poly:
    __slots__ = ("gf", "nvars", "terms")

    def __init__(self, gf: GF, nvars: int, terms: dict[tuple[int, ...], int]):
        self.gf = gf
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zero(gf: GF, nvars: int) -> "Poly":
        return Poly(gf, nvars, {})

    @staticmethod
    def constant(gf: GF, nvars: int, code: int) -> "Poly":
        """Constant with the given element code (use gf.from_int for integers)."""
        assert 0 <= code < gf.q
        return Poly(gf, nvars, {(0,) * nvars: code})

    @staticmethod
    def var(gf: GF, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return Poly(gf, nvars, {tuple(e): 1})

    @staticmethod
    def monomial(gf: GF, nvars: int, exps: tuple[int, ...], c: int = 1) -> "Poly":
        return Poly(gf, nvars, {tuple(exps): c})

    # -- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> int:
        if self.is_zero():
            return 0
        assert self.is_constant()
        return next(iter(self.terms.values()))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.gf == other.gf
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.gf, self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        gf = self.gf
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = gf.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(gf, self.nvars, out)

    def __neg__(self) -> "Poly":
        gf = self.gf
        return Poly(gf, self.nvars, {e: gf.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        gf = self.gf
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = gf.add(out.get(e, 0), gf.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(gf, self.nvars, out)

    def scale(self, c: int) -> "Poly":
        gf = self.gf
        if c == 0:
            return Poly.zero(gf, self.nvars)
        return Poly(gf, self.nvars, {e: gf.mul(co, c) for e, co in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        assert n >= 0
        result = Poly.constant(self.gf, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure -------------------------------------------------------
    def degree(self, var: Optional[int] = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        return max(e[var] for e in self.terms)

    def lead(self) -> tuple[tuple[int, ...], int]:
        e = max(self.terms, key=_glex_key)
        return e, self.terms[e]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        _, c = self.lead()
        return self.scale(self.gf.inv(c))

    def axis_valuation(self, var: int) -> float:
        if not self.terms:
            return INF
        return min(e[var] for e in self.terms)

    def shift_axis(self, var: int, k: int) -> "Poly":
        """Multiply by t_var^k (k may be negative if valuation allows)."""
        out = {}
        for e, c in self.terms.items():
            ee = list(e)
            ee[var] += k
            assert ee[var] >= 0
            out[tuple(ee)] = c
        return Poly(self.gf, self.nvars, out)

    def subs_zero(self, var: int) -> "Poly":
        """Substitute t_var = 0."""
        out = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                out[e] = c
        return Poly(self.gf, self.nvars, out)

    def derivative(self, var: int) -> "Poly":
        gf = self.gf
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            k = e[var]
            if k % gf.p == 0:
                continue
            ee = list(e)
            ee[var] = k - 1
            ee = tuple(ee)
            s = gf.add(out.get(ee, 0), gf.mul(c, k % gf.p))
            if s:
                out[ee] = s
            else:
                out.pop(ee, None)
        return Poly(gf, self.nvars, out)

    def pth_root(self) -> Optional["Poly"]:
        gf = self.gf
        p = gf.p
        out = {}
        for e, c in self.terms.items():
            if any(x % p for x in e):
                return None
            out[tuple(x // p for x in e)] = gf.pth_root(c)
        return Poly(gf, self.nvars, out)

    def frobenius(self) -> "Poly":
        gf = self.gf
        return Poly(
            gf,
            self.nvars,
            {tuple(x * gf.p for x in e): gf.frobenius(c) for e, c in self.terms.items()},
        )

    def subs(self, images: list["RatFunc"]) -> "RatFunc":
        """Substitute each variable by a rational function (all over one gf)."""
        assert len(images) == self.nvars
        if not images:
            tgt_nv = 0
        else:
            tgt_nv = images[0].nvars
        acc = RatFunc.zero(self.gf, tgt_nv)
        for e, c in sorted(self.terms.items(), key=lambda kv: _glex_key(kv[0])):
            term = RatFunc.constant(self.gf, tgt_nv, c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[i] ** k
            acc = acc + term
        return acc

    def subs_poly(self, images: list["Poly"]) -> "Poly":
        assert len(images) == self.nvars
        tgt_nv = images[0].nvars if images else 0
        acc = Poly.zero(self.gf, tgt_nv)
        for e, c in self.terms.items():
            term = Poly.constant(self.gf, tgt_nv, c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[i] ** k
            acc = acc + term
        return acc

    def map_coeffs(self, table: dict[int, int], gf_new: GF) -> "Poly":
        return Poly(gf_new, self.nvars, {e: table[c] for e, c in self.terms.items()})

    # -- printing --------------------------------------------------------
    def render(self, names: list[str]) -> str:
        if not self.terms:
            return "0"
        gf = self.gf
        parts = []
        for e in sorted(self.terms, key=_glex_key, reverse=True):
            c = self.terms[e]
            factors = []
            if c != 1 or all(k == 0 for k in e):
                factors.append(_render_coeff(c, gf))
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return self.render([f"x{i}" for i in range(self.nvars)])


def _render_coeff(c: int, gf: GF) -> str:
    if gf.e == 1 or c < gf.p:
        return str(c)
    from .field import _digits

    digs = _digits(c, gf.p, gf.e)
    parts = []
    for i, d in enumerate(digs):
        if d == 0:
            continue
        if i == 0:
            parts.append(str(d))
        else:
            head = "" if d == 1 else f"{d}*"
            parts.append(f"{head}g" + (f"^{i}" if i > 1 else ""))
    return "(" + "+".join(parts) + ")"


# -- division and gcd ----------------------------------------------------

def divexact(a: Poly, b: Poly) -> Poly:
    """Exact division; raises if b does not divide a."""
    assert not b.is_zero()
    gf = a.gf
    quot: dict[tuple[int, ...], int] = {}
    rem = a
    eb, cb = b.lead()
    cb_inv = gf.inv(cb)
    while not rem.is_zero():
        ea, ca = rem.lead()
        de = tuple(x - y for x, y in zip(ea, eb))
        if any(x < 0 for x in de):
            raise ArithmeticError("inexact polynomial division")
        c = gf.mul(ca, cb_inv)
        quot[de] = c
        rem = rem - Poly(gf, a.nvars, {de: c}) * b
    return Poly(gf, a.nvars, quot)


def _divmod_univ(a: Poly, b: Poly, var: int) -> tuple[Poly, Poly]:
    """Division with remainder, treating a, b as univariate in `var` with
    coefficients required to divide exactly (used for true 1-var polys)."""
    gf = a.gf
    assert b.degree(var) >= 0
    q = Poly.zero(gf, a.nvars)
    r = a
    db = b.degree(var)
    lead_b = _coeff_of(b, var, db)
    assert lead_b.is_constant()
    ib = gf.inv(lead_b.constant_value())
    while not r.is_zero() and r.degree(var) >= db:
        dr = r.degree(var)
        lead_r = _coeff_of(r, var, dr)
        t = lead_r.scale(ib).shift_axis(var, dr - db)
        q = q + t
        r = r - t * b
    return q, r


def _coeff_of(a: Poly, var: int, k: int) -> Poly:
    out = {}
    for e, c in a.terms.items():
        if e[var] == k:
            ee = list(e)
            ee[var] = 0
            out[tuple(ee)] = c
    return Poly(a.gf, a.nvars, out)


def _pseudo_rem(a: Poly, b: Poly, var: int) -> Poly:
    da, db = a.degree(var), b.degree(var)
    assert db >= 0
    lb = _coeff_of(b, var, db)
    r = a
    while not r.is_zero() and r.degree(var) >= db:
        dr = r.degree(var)
        lr = _coeff_of(r, var, dr)
        r = r * lb - lr.shift_axis(var, dr - db) * b
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Gcd over GF(q)[x_0..x_{n-1}], normalized monic in graded-lex."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    used = [
        v
        for v in range(a.nvars)
        if any(e[v] for e in a.terms) or any(e[v] for e in b.terms)
    ]
    if not used:
        return Poly.constant(a.gf, a.nvars, 1)
    var = used[-1]
    others = used[:-1]
    if not others:
        # honest univariate Euclid
        x, y = a, b
        while not y.is_zero():
            _, r = _divmod_univ(x, y, var)
            x, y = y, r
        return x.monic()
    ca = _content(a, var)
    cb = _content(b, var)
    pa, pb = divexact(a, ca), divexact(b, cb)
    while True:
        if pb.is_zero():
            g = pa
            break
        if pb.degree(var) == 0:
            g = Poly.constant(a.gf, a.nvars, 1)
            break
        r = _pseudo_rem(pa, pb, var)
        if r.is_zero():
            g = pb
            break
        r = divexact(r, _content(r, var))
        pa, pb = pb, r
    g = divexact(g, _content(g, var))
    return (poly_gcd(ca, cb) * g).monic()


def _content(a: Poly, var: int) -> Poly:
    coeffs = {}
    for e, c in a.terms.items():
        ee = list(e)
        k = ee[var]
        ee[var] = 0
        coeffs.setdefault(k, {})[tuple(ee)] = c
    acc = Poly.zero(a.gf, a.nvars)
    for k in sorted(coeffs):
        acc = poly_gcd(acc, Poly(a.gf, a.nvars, coeffs[k]))
        if acc.is_constant() and not acc.is_zero():
            return Poly.constant(a.gf, a.nvars, 1)
    return acc.monic()


# -- rational functions ---------------------------------------------------

class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, normalize: bool = True):
        assert num.gf == den.gf and num.nvars == den.nvars
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if normalize:
            if num.is_zero():
                den = Poly.constant(num.gf, num.nvars, 1)
            else:
                g = poly_gcd(num, den)
                if not (g.is_constant() and g.constant_value() == 1):
                    num = divexact(num, g)
                    den = divexact(den, g)
                _, lc = den.lead()
                if lc != 1:
                    inv = num.gf.inv(lc)
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den

    @property
    def gf(self) -> GF:
        return self.num.gf

    @property
    def nvars(self) -> int:
        return self.num.nvars

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zero(gf: GF, nvars: int) -> "RatFunc":
        return RatFunc(Poly.zero(gf, nvars), Poly.constant(gf, nvars, 1), normalize=False)

    @staticmethod
    def one(gf: GF, nvars: int) -> "RatFunc":
        one = Poly.constant(gf, nvars, 1)
        return RatFunc(one, one, normalize=False)

    @staticmethod
    def constant(gf: GF, nvars: int, c: int) -> "RatFunc":
        return RatFunc(Poly.constant(gf, nvars, c), Poly.constant(gf, nvars, 1), normalize=False)

    @staticmethod
    def var(gf: GF, nvars: int, i: int) -> "RatFunc":
        return RatFunc(Poly.var(gf, nvars, i), Poly.constant(gf, nvars, 1), normalize=False)

    @staticmethod
    def from_poly(p: Poly) -> "RatFunc":
        return RatFunc(p, Poly.constant(p.gf, p.nvars, 1), normalize=False)

    # -- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, normalize=False)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            inv = RatFunc(self.den, self.num)
            return inv ** (-n)
        result = RatFunc.one(self.gf, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- valuation-flavoured ops ------------------------------------------
    def axis_valuation(self, var: int) -> float:
        """t_var-adic order; INF for 0."""
        if self.is_zero():
            return INF
        return self.num.axis_valuation(var) - self.den.axis_valuation(var)

    def leading_at_axis(self, var: int) -> tuple[int, "RatFunc"]:
        """(v, c) with self = c * t_var^v * (1 + O(t_var)), c free of t_var."""
        assert not self.is_zero()
        vn = int(self.num.axis_valuation(var))
        vd = int(self.den.axis_valuation(var))
        n0 = self.num.shift_axis(var, -vn).subs_zero(var)
        d0 = self.den.shift_axis(var, -vd).subs_zero(var)
        return vn - vd, RatFunc(n0, d0)

    def restrict_axis(self, var: int) -> "RatFunc":
        """Substitute t_var = 0; requires axis_valuation >= 0."""
        v = self.axis_valuation(var)
        if v == INF:
            return self
        if v < 0:
            raise NegativeValuation(f"pole along axis {var}")
        if v > 0:
            return RatFunc.zero(self.gf, self.nvars)
        vn = int(self.num.axis_valuation(var))
        num = self.num.shift_axis(var, -vn)
        den = self.den.shift_axis(var, -vn)
        d0 = den.subs_zero(var)
        assert not d0.is_zero()
        return RatFunc(num.subs_zero(var), d0)

    def partials(self) -> tuple["RatFunc", ...]:
        """All partial derivatives, by the quotient rule."""
        out = []
        for v in range(self.nvars):
            dn = self.num.derivative(v)
            dd = self.den.derivative(v)
            out.append(RatFunc(dn * self.den - self.num * dd, self.den * self.den))
        return tuple(out)

    def pth_root(self) -> Optional["RatFunc"]:
        """g with g^p = self, or None (exact test in GF(q)(x))."""
        if self.is_zero():
            return self
        p = self.gf.p
        # num/den = num*den^(p-1) / den^p
        cand = self.num * self.den ** (p - 1)
        root = cand.pth_root()
        if root is None:
            return None
        return RatFunc(root, self.den)

    def frobenius(self) -> "RatFunc":
        return RatFunc(self.num.frobenius(), self.den.frobenius(), normalize=False)

    def subs(self, images: list["RatFunc"]) -> "RatFunc":
        num = self.num.subs(images)
        den = self.den.subs(images)
        return num / den

    def map_coeffs(self, table: dict[int, int], gf_new: GF) -> "RatFunc":
        return RatFunc(self.num.map_coeffs(table, gf_new), self.den.map_coeffs(table, gf_new))

    def polar_axes(self) -> set[int]:
        return {v for v in range(self.nvars) if self.axis_valuation(v) < 0}

    def render(self, names: list[str]) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return self.num.render(names)
        ns = self.num.render(names)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        ds = self.den.render(names)
        if len(self.den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return self.render([f"x{i}" for i in range(self.nvars)])


class NegativeValuation(ValueError):
    """Restriction to a divisor where the function has a pole."""


# -- univariate utilities --------------------------------------------------

def univ_poly(gf: GF, coeffs: Iterable[int]) -> Poly:
    return Poly(gf, 1, {(i,): c % gf.q for i, c in enumerate(coeffs) if c % gf.q})


INFINITE_PLACE = "inf"


def univ_valuation_at(g: RatFunc, place) -> float:
    """Order of a 1-variable rational function at a place.

    place: a monic irreducible Poly (1 var), or INFINITE_PLACE.
    """
    assert g.nvars == 1
    if g.is_zero():
        return INF
    if place == INFINITE_PLACE:
        return g.den.degree(0) - g.num.degree(0)
    return _multiplicity(g.num, place) - _multiplicity(g.den, place)


def _multiplicity(f: Poly, pi: Poly) -> int:
    assert not f.is_zero()
    m = 0
    while True:
        q, r = _divmod_univ(f, pi, 0)
        if not r.is_zero():
            return m
        f = q
        m += 1


def univ_eval(f: Poly, x: int) -> int:
    """Evaluate a univariate polynomial at a field element (Horner)."""
    gf = f.gf
    if f.is_zero():
        return 0
    acc = 0
    for k in range(f.degree(0), -1, -1):
        acc = gf.add(gf.mul(acc, x), f.terms.get((k,), 0))
    return acc


def sqrt_in_radicial(g: RatFunc) -> RatFunc:
    """For p = 2: the square root of g(t) in GF(q)(w), w^2 = t.

    Returns a 1-variable rational function in w.  Always exists: Frobenius
    is bijective on GF(q)(w) onto GF(q)(w^2).
    """
    gf = g.gf
    assert gf.p == 2 and g.nvars == 1
    if g.is_zero():
        return g

    def root_of(f: Poly) -> Poly:
        # f(w^2) = (sum c_e^(1/2) w^e)^2
        return Poly(gf, 1, {e: gf.pth_root(c) for e, c in f.terms.items()})

    # sqrt(n/d) = sqrt(n*d)/d(w^2)
    nd = g.num * g.den
    root = root_of(nd)
    den_w2 = Poly(gf, 1, {(2 * e[0],): c for e, c in g.den.terms.items()})
    return RatFunc(root, den_w2)


def radicial_place(pi: Poly) -> Poly:
    """The place of the radicial cover D^(1/2) over the place pi(t) of D:
    pi(w^2) = tilde(pi)(w)^2 with tilde coefficientwise square root."""
    gf = pi.gf
    assert gf.p == 2
    return Poly(gf, 1, {e: gf.pth_root(c) for e, c in pi.terms.items()})


# -- univariate factorization (over GF(q)) --------------------------------

def squarefree_part_factors(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition [(g_i, m_i)] with f = prod g_i^(m_i) * lc."""
    f = f.monic()
    if f.degree(0) <= 0:
        return []
    out: dict[int, Poly] = {}
    _squarefree(f, 1, out)
    return [(g, m) for m, g in sorted(out.items())]


def _squarefree(f: Poly, mult: int, out: dict[int, Poly]):
    gf = f.gf
    p = gf.p
    df = f.derivative(0)
    if df.is_zero():
        root = f.pth_root()
        assert root is not None
        _squarefree(root.monic(), mult * p, out)
        return
    g = poly_gcd(f, df)
    w = divexact(f, g)
    k = mult
    while w.degree(0) > 0:
        y = poly_gcd(w, g)
        z = divexact(w, y)
        if z.degree(0) > 0:
            prev = out.get(k)
            out[k] = (prev * z).monic() if prev is not None else z.monic()
        w = y
        g = divexact(g, y)
        k += mult
    if g.degree(0) > 0:
        # the leftover collects the factors with multiplicity divisible by p
        root = g.monic().pth_root()
        assert root is not None
        _squarefree(root.monic(), mult * p, out)


def factor_univariate(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, deterministic order."""
    assert f.nvars == 1 and not f.is_zero()
    result: list[tuple[Poly, int]] = []
    for g, m in squarefree_part_factors(f):
        for h in _factor_squarefree(g):
            result.append((h, m))
    result.sort(key=lambda pm: (pm[0].degree(0), sorted(pm[0].terms.items())))
    return result


def _factor_squarefree(f: Poly) -> list[Poly]:
    gf = f.gf
    q = gf.q
    out: list[Poly] = []
    # distinct-degree
    x = Poly.var(gf, 1, 0)
    h = x
    v = f
    d = 0
    pieces: list[tuple[Poly, int]] = []
    while v.degree(0) >= 2 * (d + 1):
        d += 1
        h = _powmod(h, q, v)
        g = poly_gcd(v, h - x)
        if g.degree(0) > 0:
            pieces.append((g.monic(), d))
            v = divexact(v, g)
            h = _rem(h, v)
    if v.degree(0) > 0:
        pieces.append((v.monic(), v.degree(0)))
    for g, d in pieces:
        out.extend(_equal_degree(g, d))
    return out


def _rem(a: Poly, m: Poly) -> Poly:
    _, r = _divmod_univ(a, m, 0)
    return r


def _powmod(a: Poly, n: int, m: Poly) -> Poly:
    result = Poly.constant(a.gf, 1, 1)
    a = _rem(a, m)
    while n:
        if n & 1:
            result = _rem(result * a, m)
        a = _rem(a * a, m)
        n >>= 1
    return result


def _equal_degree(f: Poly, d: int) -> list[Poly]:
    """Cantor-Zassenhaus split of a squarefree product of degree-d factors.
    Deterministic: the rng is seeded from the polynomial itself."""
    gf = f.gf
    n = f.degree(0)
    if n == d:
        return [f.monic()]
    rng = random.Random(hash((gf.p, gf.e, frozenset(f.terms.items()))) & 0xFFFFFFFF)
    q = gf.q
    while True:
        a = Poly(gf, 1, {(i,): rng.randrange(q) for i in range(n)})
        if a.degree(0) < 1:
            continue
        g = poly_gcd(f, a)
        if 0 < g.degree(0) < n:
            break
        if q % 2 == 1:
            b = _powmod(a, (q ** d - 1) // 2, f) - Poly.constant(gf, 1, 1)
        else:
            # trace map for characteristic 2
            b = a
            acc = a
            for _ in range(d * gf.e - 1):
                acc = _rem(acc * acc, f)
                b = b + acc
        g = poly_gcd(f, b)
        if 0 < g.degree(0) < n:
            break
    left = _equal_degree(g.monic(), d)
    right = _equal_degree(divexact(f, g).monic(), d)
    return left + right


def univ_roots(f: Poly) -> list[int]:
    """Roots in GF(q), by scanning (q is small)."""
    gf = f.gf
    assert f.nvars == 1 and not f.is_zero()
    return [x for x in range(gf.q) if univ_eval(f, x) == 0]
