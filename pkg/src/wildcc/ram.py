"""Ramification invariants of a rank-one character on a chart.

Everything is computed from an admissible Witt representative: one whose
exact differential has nonzero leading part along each wild axis, so that
the Swan conductor is read off the pole orders and the restricted
differential realizes the refined Swan conductor and characteristic form.

Wherever the theory provides several routes to the same number (direct
valuations, the residue section, the stable-order formula, the Witt
coefficient criteria) we compute all applicable ones and demand agreement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .field import GF
from .geometry import Chart, Place, SurfaceModel, origin_place, to_univariate
from .poly import (
    INF,
    INFINITE_PLACE,
    Poly,
    RatFunc,
    factor_univariate,
    poly_gcd,
    radicial_place,
    sqrt_in_radicial,
    univ_valuation_at,
)
from .witt import (
    WittVec,
    frobenius,
    fsd,
    in_fil_prime,
    witt_add,
    witt_neg,
    witt_order,
    witt_sub,
)


class ReductionFailed(ArithmeticError):
    """The greedy admissible-reduction step could not make progress."""


class InternalPoleError(ArithmeticError):
    """A form coefficient fails the regularity its filtration promises."""


class InvariantViolation(AssertionError):
    """Two formulas the theory says agree disagreed (CLI exit code 2)."""


# -- admissible reduction ---------------------------------------------------

def _phi_image_nonzero(w: WittVec, axis: int, n: int) -> bool:
    """Is the class of -F^(s-1)d(w) nonzero in gr_n of the 1-forms along
    the axis?  Coefficients: alpha = c_axis * t^(n+1), beta = c_other * t^n."""
    c = fsd(w)
    other = 1 - axis
    va = c[axis].axis_valuation(axis)
    vb = c[other].axis_valuation(axis)
    if va < -(n + 1) or vb < -n:
        raise InternalPoleError("differential exceeds its filtration bound")
    return va == -(n + 1) or vb == -n


def reduce_admissible(w: WittVec, axis: int) -> WittVec:
    """Modify w by (F-1)-coboundaries until it is zero, regular, or its
    leading differential along the axis is nonzero (then -order = sw)."""
    if w.is_zero():
        return w
    p = w.gf.p
    s = w.s
    start = witt_order(w, axis)
    guard = s * (int(-start) + 2) + 8 if start != INF and start < 0 else 8
    prev_state = None
    for _ in range(max(guard, 8)):
        if w.is_zero():
            return w
        n = -witt_order(w, axis)
        if n <= 0:
            return w
        n = int(n)
        if _phi_image_nonzero(w, axis, n):
            return w
        sharp = [
            i
            for i, comp in enumerate(w.comps)
            if (p ** i) * comp.axis_valuation(axis) == -n
        ]
        if not sharp:
            raise ReductionFailed("zero graded image without sharp components")
        m = max(sharp)
        state = (-n, m)
        if prev_state is not None and state <= prev_state:
            raise ReductionFailed("no progress in admissible reduction")
        prev_state = state
        v_ord, lead = w.comps[m].leading_at_axis(axis)
        t = RatFunc.var(w.gf, w.nvars, axis)
        lt = lead * t ** v_ord
        root = lt.pth_root()
        if root is None:
            raise ReductionFailed(
                "leading term of the top sharp component is not a p-th power"
            )
        vcomps = [RatFunc.zero(w.gf, w.nvars) for _ in range(s)]
        vcomps[m] = root
        v = WittVec(tuple(vcomps))
        w = witt_add(witt_sub(w, frobenius(v)), v)
    raise ReductionFailed("admissible reduction exceeded its iteration guard")


# -- divisor-level data -------------------------------------------------------

@dataclass
class DivisorRam:
    divisor: str
    sw: int
    dt: int
    type_: str  # "I" | "II" | "tame"
    exceptional: bool

    @property
    def wild(self) -> bool:
        return self.sw > 0


def _ord_p_int(m: int, p: int) -> int:
    k = 0
    while m > 0 and m % p == 0:
        m //= p
        k += 1
    return k


def classify_axis(w_red: WittVec, axis: int, p: int) -> tuple[int, int, str, bool]:
    """(sw, dt, type, exceptional) for an admissible vector along the axis."""
    o = witt_order(w_red, axis)
    sw = 0 if o == INF or o >= 0 else int(-o)
    if sw == 0:
        return 0, 1, "tame", False
    dt = sw if in_fil_prime(w_red, sw, axis) else sw + 1
    type_ = "II" if dt == sw else "I"
    exceptional = (p, sw, dt) == (2, 2, 2)
    # cross-check against the order criterion on the weight-p^(s') component
    sp = _ord_p_int(sw, p)
    if sp < w_red.s:
        is_type_I = w_red.comps[sp].axis_valuation(axis) == -(sw // p ** sp)
        if is_type_I != (type_ == "I"):
            raise InvariantViolation(
                f"type classification mismatch along axis {axis}: "
                f"filtration says {type_}, component order says "
                f"{'I' if is_type_I else 'II'}"
            )
    return sw, dt, type_, exceptional


# -- per-chart analysis -------------------------------------------------------

class ChartAnalysis:
    """Reduced representative and form data for one chart."""

    def __init__(self, chart: Chart, witt: WittVec, tame_ids: frozenset[str] = frozenset()):
        self.chart = chart
        self.gf = chart.gf
        self.p = chart.gf.p
        self.witt_raw = witt
        w = witt
        for axis in chart.boundary_axes():
            w = reduce_admissible(w, axis)
        # a later axis reduction must not break earlier admissibility
        for axis in chart.boundary_axes():
            o = witt_order(w, axis)
            if o != INF and o < 0 and not _phi_image_nonzero(w, axis, int(-o)):
                raise InvariantViolation(
                    "sequential reduction lost admissibility on an earlier axis"
                )
        self.witt = w
        self.ram: dict[int, DivisorRam] = {}
        for axis in chart.boundary_axes():
            div = chart.boundary[axis]
            sw, dt, type_, exc = classify_axis(w, axis, self.p)
            if div in tame_ids and sw > 0:
                raise InvariantViolation(
                    f"component {div} declared tame but has Swan conductor {sw}"
                )
            self.ram[axis] = DivisorRam(div, sw, dt, type_, exc)
        self.fsd = fsd(w)
        self._rsw_cache: dict[int, dict] = {}
        self._cform_cache: dict[int, dict] = {}

    # R and R' as axis -> multiplicity maps, over boundary axes
    def R(self) -> dict[int, int]:
        return {a: r.sw for a, r in self.ram.items()}

    def R_prime(self) -> dict[int, int]:
        return {a: r.dt for a, r in self.ram.items()}

    def wild_axes(self) -> list[int]:
        return [a for a, r in self.ram.items() if r.wild]

    def _pole_factor(self, mults: dict[int, int]) -> RatFunc:
        acc = RatFunc.one(self.gf, 2)
        for a, m in mults.items():
            acc = acc * RatFunc.var(self.gf, 2, a) ** m
        return acc

    def rsw_coefficients(self) -> dict[tuple, RatFunc]:
        """Normalized coefficients of the log form: the form equals
        (sum A_i dlog t_i + sum B_j dt_j) / prod t^(sw).

        keys: ("log", axis) for boundary axes, ("d", axis) otherwise."""
        poles = self._pole_factor(self.R())
        out = {}
        for axis in (0, 1):
            c = self.fsd[axis]
            if self.chart.boundary[axis] is not None:
                t = RatFunc.var(self.gf, 2, axis)
                out[("log", axis)] = c * t * poles
            else:
                out[("d", axis)] = c * poles
        return out

    def cform_coefficients(self) -> dict[tuple, RatFunc]:
        """Coefficients of the non-log form (sum A'_i dt_i)/prod t^(dt);
        the p=2 radicial half-term is added at restriction time."""
        poles = self._pole_factor(self.R_prime())
        return {("d", axis): self.fsd[axis] * poles for axis in (0, 1)}

    # -- restrictions -------------------------------------------------------
    def rsw_restriction(self, axis: int) -> dict[tuple, RatFunc]:
        """rsw coefficients restricted to the divisor t_axis = 0, as
        univariate functions of the other coordinate."""
        got = self._rsw_cache.get(axis)
        if got is not None:
            return got
        assert self.ram[axis].wild, "rsw restriction only along wild axes"
        out = {}
        nonzero = False
        for key, coeff in self.rsw_coefficients().items():
            if coeff.axis_valuation(axis) < 0:
                raise InternalPoleError("rsw coefficient with pole along the divisor")
            r = to_univariate(coeff.restrict_axis(axis), 1 - axis)
            out[key] = r
            nonzero = nonzero or not r.is_zero()
        if not nonzero:
            raise InvariantViolation(
                "refined Swan conductor vanishes at the generic point"
            )
        self._rsw_cache[axis] = out
        return out

    def cform_restriction(self, axis: int) -> tuple[dict[tuple, RatFunc], bool]:
        """cform coefficients restricted to the divisor, and whether they live
        on the radicial cover (then valuations are w-adic, w^2 = coordinate).

        Returns univariate functions of the divisor coordinate (or of w)."""
        got = self._cform_cache.get(axis)
        if got is not None:
            return got
        assert self.ram[axis].wild
        radicial = self.ram[axis].exceptional
        out = {}
        for key, coeff in self.cform_coefficients().items():
            if coeff.axis_valuation(axis) < 0:
                raise InternalPoleError("cform coefficient with pole along the divisor")
            r = to_univariate(coeff.restrict_axis(axis), 1 - axis)
            if radicial:
                # rewrite in w (t = w^2): even exponents
                r = r.subs([RatFunc.var(self.gf, 1, 0) ** 2])
            out[key] = r
        if self.p == 2 and self.ram[axis].dt == 2:
            # (varphip) half-term sqrt(t^2 a_0) dt/t^2 on the exceptional slot;
            # it restricts to zero unless the divisor is of exceptional type.
            radicand = self.witt.comps[0] * RatFunc.var(self.gf, 2, axis) ** 2
            for b, m in self.R_prime().items():
                if b != axis:
                    radicand = radicand * RatFunc.var(self.gf, 2, b) ** (2 * m)
            if radicand.axis_valuation(axis) < 0:
                raise InternalPoleError("radicial term exceeds its pole bound")
            rad = to_univariate(radicand.restrict_axis(axis), 1 - axis)
            if not rad.is_zero():
                assert radicial, "surviving radicial term off the exceptional case"
                out[("d", axis)] = out[("d", axis)] + sqrt_in_radicial(rad)
        nonzero = any(not r.is_zero() for r in out.values())
        if not nonzero:
            raise InvariantViolation("characteristic form vanishes at the generic point")
        result = (out, radicial)
        self._cform_cache[axis] = result
        return result

    # -- orders at places ----------------------------------------------------
    def ord_at(self, axis: int, pi: Poly) -> int:
        """ord(chi; x, D_axis): minimal valuation at pi of the restricted
        rsw coefficients."""
        vals = []
        for r in self.rsw_restriction(axis).values():
            vals.append(univ_valuation_at(r, pi))
        v = min(vals)
        if v < 0:
            raise InternalPoleError("rsw restriction has a pole at a closed point")
        assert v != INF
        return int(v)

    def ordp2_at(self, axis: int, pi: Poly) -> int:
        """2 * ord'(chi; x, D_axis) (integer; odd only in the exceptional case)."""
        coeffs, radicial = self.cform_restriction(axis)
        vals = []
        for r in coeffs.values():
            if radicial:
                vals.append(univ_valuation_at(r, radicial_place(pi)))
            else:
                v = univ_valuation_at(r, pi)
                vals.append(v if v == INF else 2 * v)
        v = min(vals)
        if v < 0:
            raise InternalPoleError("cform restriction has a pole at a closed point")
        assert v != INF
        return int(v)

    def xi_section(self, axis: int) -> RatFunc:
        """The residue section of rsw along the divisor: the dlog t_axis
        coefficient restricted to the divisor (identically 0 iff type II)."""
        return self.rsw_restriction(axis)[("log", axis)]

    def xi_val_at(self, axis: int, pi: Poly) -> float:
        return univ_valuation_at(self.xi_section(axis), pi)

    # -- point enumeration ----------------------------------------------------
    def nonclean_places(self, axis: int) -> list[Poly]:
        """Places on the divisor (this chart) where ord >= 1."""
        return self._common_zero_places(list(self.rsw_restriction(axis).values()), axis)

    def nondeg_failure_places(self, axis: int) -> list[Poly]:
        coeffs, radicial = self.cform_restriction(axis)
        if radicial:
            # common zeros in w, pushed down to places of the divisor:
            # the place below h(w) has coefficientwise-Frobenius coefficients
            g = None
            for r in coeffs.values():
                if r.is_zero():
                    continue
                g = r.num if g is None else poly_gcd(g, r.num)
            if g is None or g.degree(0) <= 0:
                return []
            seen: list[Poly] = []
            for h, _m in factor_univariate(g):
                if h.degree(0) == 0:
                    continue
                pi = Poly(
                    self.gf, 1, {e: self.gf.frobenius(c) for e, c in h.terms.items()}
                ).monic()
                if pi not in seen and self.ordp2_at(axis, pi) >= 1:
                    seen.append(pi)
            seen.sort(key=lambda pi: (pi.degree(0), sorted(pi.terms.items())))
            return seen
        places = self._common_zero_places(list(coeffs.values()), axis)
        return [pi for pi in places if self.ordp2_at(axis, pi) >= 1]

    def _common_zero_places(self, coeffs: list[RatFunc], axis: int) -> list[Poly]:
        g = None
        for r in coeffs:
            if r.is_zero():
                continue
            g = r.num if g is None else poly_gcd(g, r.num)
        if g is None or g.degree(0) <= 0:
            return []
        out = []
        for pi, _m in factor_univariate(g):
            if pi.degree(0) == 0:
                continue
            vals = [univ_valuation_at(r, pi) for r in coeffs]
            if min(vals) >= 1:
                out.append(pi)
        out.sort(key=lambda pi: (pi.degree(0), sorted(pi.terms.items())))
        return out

    def xi_zero_places(self, axis: int) -> list[Poly]:
        xi = self.xi_section(axis)
        if xi.is_zero():
            return []
        out = [pi for pi, _ in factor_univariate(xi.num) if pi.degree(0) > 0]
        out.sort(key=lambda pi: (pi.degree(0), sorted(pi.terms.items())))
        return out


# -- point reports ------------------------------------------------------------

@dataclass
class PointReport:
    place: Place
    degree: int
    divisors: list[str]            # I_x
    wild: list[str]                # I_W,x
    type_I: list[str]
    type_II: list[str]
    tame: list[str]
    ord: dict[str, int]
    ordp2: dict[str, int]
    clean: bool
    strongly_clean: bool
    non_degenerate: bool
    sx: Optional[int] = None
    tx: Optional[int] = None

    def ord_prime_minus_ord_doubled(self, div: str) -> int:
        return self.ordp2[div] - 2 * self.ord[div]


def point_report(ca: ChartAnalysis, place: Place) -> PointReport:
    """All per-point invariants at a place on a boundary divisor, cross-checked
    through every formula the theory makes applicable."""
    chart = ca.chart
    axis = place.axis
    assert chart.boundary[axis] == place.divisor
    on_axes = [axis]
    if place.is_origin() and chart.boundary[1 - axis] is not None:
        on_axes.append(1 - axis)
    divisors = [chart.boundary[a] for a in on_axes]
    wild_axes = [a for a in on_axes if ca.ram[a].wild]
    wild = [chart.boundary[a] for a in wild_axes]
    t_I = [chart.boundary[a] for a in wild_axes if ca.ram[a].type_ == "I"]
    t_II = [chart.boundary[a] for a in wild_axes if ca.ram[a].type_ == "II"]
    tame = [chart.boundary[a] for a in on_axes if not ca.ram[a].wild]

    def place_on(a: int) -> Poly:
        if a == axis:
            return place.pi
        assert place.is_origin()
        return Poly.var(ca.gf, 1, 0)

    ords: dict[str, int] = {}
    ordp2s: dict[str, int] = {}
    for a in wild_axes:
        pi = place_on(a)
        ords[chart.boundary[a]] = ca.ord_at(a, pi)
        ordp2s[chart.boundary[a]] = ca.ordp2_at(a, pi)

    clean_flags = [ords[d] == 0 for d in wild]
    if clean_flags and any(clean_flags) != all(clean_flags):
        raise InvariantViolation("ord=0 for some but not all wild components")
    clean = all(clean_flags) if clean_flags else True

    nd_flags = [ordp2s[d] == 0 for d in wild]
    if nd_flags and any(nd_flags) != all(nd_flags):
        raise InvariantViolation("ord'=0 for some but not all wild components")
    non_degenerate = all(nd_flags) if nd_flags else True

    strongly_clean = True
    for a in wild_axes:
        if ca.xi_val_at(a, place_on(a)) != 0:
            strongly_clean = False
    if strongly_clean and wild and not clean:
        raise InvariantViolation("strongly clean point fails cleanliness")

    rep = PointReport(
        place=place,
        degree=place.degree,
        divisors=divisors,
        wild=wild,
        type_I=t_I,
        type_II=t_II,
        tame=tame,
        ord=ords,
        ordp2=ordp2s,
        clean=clean,
        strongly_clean=strongly_clean,
        non_degenerate=non_degenerate,
    )
    _cross_check_point(ca, place, rep, on_axes, wild_axes, place_on)
    return rep


def _cross_check_point(ca, place, rep, on_axes, wild_axes, place_on):
    chart = ca.chart
    p = ca.p

    # Tame-wild meetings are never non-degenerate (lemint-style vanishing).
    if rep.tame and rep.wild and rep.non_degenerate:
        raise InvariantViolation("non-degenerate point on a tame-wild crossing")

    # Residue-route ord' for type-I components.
    for a in wild_axes:
        div = chart.boundary[a]
        if ca.ram[a].type_ != "I":
            continue
        xi_v = ca.xi_val_at(a, place_on(a))
        if xi_v == INF:
            raise InvariantViolation("type I component with vanishing residue section")
        expected = int(xi_v) + len(rep.type_I) + len(rep.tame) - 1
        if rep.ordp2[div] != 2 * expected:
            raise InvariantViolation(
                f"ord' mismatch on {div}: residue formula gives {expected}, "
                f"direct valuation gives {rep.ordp2[div] / 2}"
            )

    # Stable-order route for type-I components (admissible representative).
    for a in wild_axes:
        div = chart.boundary[a]
        if ca.ram[a].type_ != "I":
            continue
        expected2 = _stable_order_doubled(ca, a, on_axes, wild_axes, place_on)
        if expected2 is not None and rep.ordp2[div] != expected2:
            raise InvariantViolation(
                f"ord' mismatch on {div}: stable-order formula gives "
                f"{expected2 / 2}, direct valuation gives {rep.ordp2[div] / 2}"
            )

    # Witt-coefficient cleanliness criteria.
    _check_witt_criteria(ca, place, rep, on_axes, wild_axes, place_on)

    # Clean-point structure (itsn / corintdeg / corwitt).
    if rep.wild and rep.clean:
        if len(rep.divisors) == 2 and not rep.type_I:
            raise InvariantViolation("clean full crossing with no type-I component")
        cond_a = set(rep.divisors) == set(rep.type_II)
        cond_b = (
            set(rep.divisors) == set(rep.wild)
            and len(rep.type_I) == 1
            and all(
                ca.xi_val_at(a, place_on(a)) == 0
                for a in wild_axes
                if ca.ram[a].type_ == "I"
            )
        )
        if rep.non_degenerate != (cond_a or cond_b):
            raise InvariantViolation("non-degeneracy disagrees with the clean-point criterion")
        if not rep.non_degenerate and set(rep.wild) != set(rep.type_I):
            raise InvariantViolation("clean degenerate point with a non-type-I wild component")
        if len(rep.divisors) == 2 and set(rep.wild) == set(rep.divisors):
            sps = {
                chart.boundary[a]: _ord_p_int(ca.ram[a].sw, p) for a in wild_axes
            }
            sp1 = min(sps.values())
            for a in wild_axes:
                div = chart.boundary[a]
                nonzero_res = ca.xi_val_at(a, place_on(a)) == 0
                if nonzero_res != (sps[div] == sp1):
                    raise InvariantViolation(
                        "residue nonvanishing disagrees with the minimal-slope criterion"
                    )
        if len(rep.divisors) == 2 and len(rep.wild) == 1:
            a = wild_axes[0]
            if ca.xi_val_at(a, place_on(a)) != 0:
                raise InvariantViolation(
                    "wild-tame clean crossing with vanishing residue image"
                )


def _stable_order_doubled(ca, a, on_axes, wild_axes, place_on) -> Optional[int]:
    """2*ord' by the stable-order formula from the Witt component of weight
    p^(s'_a), valid for type-I components."""
    chart = ca.chart
    p = ca.p
    div_ram = ca.ram[a]
    sp = _ord_p_int(div_ram.sw, p)
    if sp >= ca.witt.s:
        return None
    comp = ca.witt.comps[sp]
    shifted = comp
    for b in wild_axes:
        nb = ca.ram[b].sw
        shifted = shifted * RatFunc.var(ca.gf, 2, b) ** (nb // (p ** sp))
    # shifted must be regular along the axis; its restriction's valuation is n
    if shifted.axis_valuation(a) < 0:
        return None
    restr = to_univariate(shifted.restrict_axis(a), 1 - a)
    v = univ_valuation_at(restr, place_on(a))
    if v == INF:
        raise InvariantViolation("stable-order component vanishes identically")
    n_tame = sum(1 for b in on_axes if not ca.ram[b].wild)
    acc = int(v) * (p ** sp) + n_tame
    for b in wild_axes:
        if b == a:
            continue
        acc += ca.ram[b].dt - (p ** sp) * (ca.ram[b].sw // (p ** sp))
    return 2 * acc


def _check_witt_criteria(ca, place, rep, on_axes, wild_axes, place_on):
    """Cleanliness via the coefficient criteria on the admissible vector."""
    chart = ca.chart
    p = ca.p
    if not rep.wild:
        return
    sps = [_ord_p_int(ca.ram[a].sw, p) for a in wild_axes]
    sp1 = min(sps)
    # a'_h = comps[h] * prod t_b^(sw_b / p^h) for h <= sp1
    def shifted(h: int) -> Optional[RatFunc]:
        c = ca.witt.comps[h]
        for b in wild_axes:
            c = c * RatFunc.var(ca.gf, 2, b) ** (ca.ram[b].sw // (p ** h))
        for b in on_axes:
            if c.axis_valuation(b) < 0:
                return None
        return c

    def value_nonzero(c: RatFunc) -> bool:
        # nonzero at the closed point: restrict along the hosting axis, then
        # valuate at the place
        r = to_univariate(c.restrict_axis(place.axis), 1 - place.axis)
        return univ_valuation_at(r, place.pi) == 0

    top = shifted(sp1)
    if top is None:
        return
    if value_nonzero(top):
        if not rep.clean:
            raise InvariantViolation(
                "invertible leading Witt coefficient at a non-clean point"
            )
        return
    # converse at full crossings (#I_x = dim = 2)
    if len(on_axes) == 2:
        if rep.clean:
            raise InvariantViolation(
                "clean full crossing with non-invertible leading coefficient"
            )
        return
    # single-divisor criterion, when the lower coefficients vanish at x
    lower = [shifted(h) for h in range(sp1)]
    if any(c is None for c in lower):
        return
    if any(value_nonzero(c) for c in lower):
        return
    a0 = shifted(0)
    assert a0 is not None
    r0 = to_univariate(a0.restrict_axis(place.axis), 1 - place.axis)
    v0 = univ_valuation_at(r0, place.pi)
    # (t_axis, a'_0) is part of a coordinate system at x iff a'_0 restricted
    # to the divisor cuts the place with multiplicity one
    if rep.clean != (v0 == 1):
        raise InvariantViolation(
            "cleanliness disagrees with the coordinate-system criterion"
        )


# -- surface-level orchestration ----------------------------------------------

class Analysis:
    """Divisor and point invariants for a whole surface model."""

    def __init__(self, model: SurfaceModel):
        self.model = model
        self.charts: dict[str, ChartAnalysis] = {}
        for cn, chart in model.charts.items():
            self.charts[cn] = ChartAnalysis(chart, model.witt_by_chart[cn], model.tame_ids)
        self.divisors: dict[str, DivisorRam] = {}
        for div in model.boundary_ids:
            rams = []
            for cn, axis in model.homes(div):
                rams.append(self.charts[cn].ram[axis])
            first = rams[0]
            for other in rams[1:]:
                if (other.sw, other.dt, other.type_, other.exceptional) != (
                    first.sw,
                    first.dt,
                    first.type_,
                    first.exceptional,
                ):
                    raise InvariantViolation(
                        f"divisor {div}: invariants disagree between charts"
                    )
            self.divisors[div] = first
        self._reports: dict[tuple, PointReport] = {}

    def chart_of(self, place: Place) -> ChartAnalysis:
        return self.charts[place.chart]

    def report(self, place: Place) -> PointReport:
        key = (place.chart, place.axis, place.pi)
        got = self._reports.get(key)
        if got is None:
            got = point_report(self.charts[place.chart], place)
            self._reports[key] = got
        return got

    def divisor_places(self, div: str) -> list[Place]:
        """Interesting places of the divisor: crossings, points where any
        invariant can be nonzero, and the chart-infinity point."""
        out: list[Place] = []
        seen: set = set()

        def push(place: Place):
            k = (place.chart, place.axis, place.pi)
            if k not in seen:
                seen.add(k)
                out.append(place)

        cn, axis = self.model.owner_home(div)
        ca = self.charts[cn]
        chart = ca.chart
        if chart.boundary[1 - axis] is not None:
            push(origin_place(chart, axis))
        if ca.ram[axis].wild:
            for pi in ca.nonclean_places(axis):
                push(Place(cn, axis, div, pi))
            for pi in ca.nondeg_failure_places(axis):
                push(Place(cn, axis, div, pi))
            for pi in ca.xi_zero_places(axis):
                push(Place(cn, axis, div, pi))
        infp = self.model.infinity_place(div)
        if infp is not None:
            push(infp)
        return out

    def all_places(self) -> list[Place]:
        """Deduplicated interesting places across all divisors."""
        out: list[Place] = []
        seen_points: set = set()
        for div in self.model.boundary_ids:
            for pl in self.divisor_places(div):
                chart = self.model.charts[pl.chart]
                pk = pl.point_key(chart)
                if pk in seen_points:
                    continue
                seen_points.add(pk)
                out.append(pl)
        return out

    def nonclean_points(self) -> list[Place]:
        return [pl for pl in self.all_places() if not self.report(pl).clean]
