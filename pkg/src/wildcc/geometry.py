"""Charts, closed points, and the A2 / P2 surface models.

Every surface is handled through affine charts with two coordinates whose
boundary components are coordinate axes.  Closed points of a boundary
divisor are places: monic irreducible polynomials in the coordinate along
the divisor, attached to a canonical owner chart so that cross-chart
duplicates never arise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .field import GF
from .poly import Poly, RatFunc
from .witt import WittVec


class InputError(ValueError):
    """Bad input specification (CLI exit code 1)."""


class PolarLocusOutsideBoundary(InputError):
    pass


@dataclass(frozen=True)
class Chart:
    name: str
    var_names: tuple[str, str]
    boundary: tuple[Optional[str], Optional[str]]  # divisor id per axis, or None
    gf: GF

    def boundary_axes(self) -> list[int]:
        return [i for i in (0, 1) if self.boundary[i] is not None]

    def divisor_axis(self, div_id: str) -> int:
        for i in (0, 1):
            if self.boundary[i] == div_id:
                return i
        raise KeyError(div_id)

    def names(self) -> list[str]:
        return list(self.var_names)


@dataclass(frozen=True)
class Place:
    """A closed point on a boundary divisor: axis t_axis = 0, pi(tau) = 0
    where tau is the other coordinate of the owner chart."""

    chart: str
    axis: int
    divisor: str
    pi: Poly  # monic irreducible, univariate in the other coordinate

    @property
    def degree(self) -> int:
        return self.pi.degree(0)

    def is_origin(self) -> bool:
        return self.pi.terms == {(1,): 1}

    def point_key(self, chart: Chart) -> tuple:
        """Identity of the underlying closed point (host-divisor free)."""
        if self.is_origin() and chart.boundary[1 - self.axis] is not None:
            return (self.chart, "origin")
        return (self.chart, self.axis, frozenset(self.pi.terms.items()))

    def render(self, chart: Chart) -> str:
        tau = chart.var_names[1 - self.axis]
        host = chart.var_names[self.axis]
        pi_s = self.pi.render([tau])
        return f"{self.chart}: {host}=0, {pi_s}=0"


def origin_place(chart: Chart, axis: int) -> Place:
    div = chart.boundary[axis]
    assert div is not None
    return Place(chart.name, axis, div, Poly.var(chart.gf, 1, 0))


class SurfaceModel:
    """A declared character on A2 or P2: charts, boundary, per-chart Witt data."""

    def __init__(
        self,
        kind: str,
        gf: GF,
        s: int,
        boundary_ids: list[str],
        tame_ids: frozenset[str],
        witt_by_chart: dict[str, WittVec],
        charts: dict[str, Chart],
        divisor_homes: dict[str, list[tuple[str, int]]],
    ):
        self.kind = kind
        self.gf = gf
        self.s = s
        self.boundary_ids = list(boundary_ids)
        self.tame_ids = tame_ids
        self.witt_by_chart = witt_by_chart
        self.charts = charts
        self.divisor_homes = divisor_homes

    def owner_home(self, div_id: str) -> tuple[str, int]:
        return self.divisor_homes[div_id][0]

    def homes(self, div_id: str) -> list[tuple[str, int]]:
        return self.divisor_homes[div_id]

    def infinity_place(self, div_id: str) -> Optional[Place]:
        """The one closed point of the divisor missed by its owner chart
        (P2 lines only; A2 divisors are affine)."""
        homes = self.divisor_homes[div_id]
        if len(homes) < 2:
            return None
        chart_name, axis = homes[1]
        chart = self.charts[chart_name]
        return Place(chart_name, axis, div_id, Poly.var(self.gf, 1, 0))


P2_LINES = ("S0", "S1", "S2")
# chart U_j covers S_j != 0; axes are the other two lines in index order
_P2_CHART_AXES = {
    "U0": ("S1", "S2"),
    "U1": ("S0", "S2"),
    "U2": ("S0", "S1"),
}
_P2_VAR_NAMES = {
    "U0": ("T1", "T2"),
    "U1": ("u0", "u2"),
    "U2": ("v0", "v1"),
}
# substitution (S0, S1, S2) -> chart coordinates
_P2_SUBS = {
    "U0": (None, 0, 1),  # S0=1, S1=x0, S2=x1
    "U1": (0, None, 1),
    "U2": (0, 1, None),
}


def _p2_chart_images(gf: GF, chart: str) -> list[RatFunc]:
    spec = _P2_SUBS[chart]
    out = []
    for sl in spec:
        if sl is None:
            out.append(RatFunc.one(gf, 2))
        else:
            out.append(RatFunc.var(gf, 2, sl))
    return out


def build_a2(
    gf: GF,
    s: int,
    witt: WittVec,
    boundary_ids: list[str],
    tame_ids: frozenset[str] = frozenset(),
) -> SurfaceModel:
    """boundary_ids subset of {"t1", "t2"}."""
    axes = {"t1": 0, "t2": 1}
    for b in boundary_ids:
        if b not in axes:
            raise InputError(f"unknown A2 boundary component {b!r}")
    bnd: list[Optional[str]] = [None, None]
    for b in boundary_ids:
        bnd[axes[b]] = b
    chart = Chart("A", ("t1", "t2"), tuple(bnd), gf)
    homes = {b: [("A", axes[b])] for b in boundary_ids}
    model = SurfaceModel(
        "A2", gf, s, boundary_ids, tame_ids, {"A": witt}, {"A": chart}, homes
    )
    _validate_polar_locus(model)
    return model


def build_p2(
    gf: GF,
    s: int,
    witt_hom: WittVec,
    boundary_ids: list[str],
    tame_ids: frozenset[str] = frozenset(),
) -> SurfaceModel:
    """witt_hom: components as 3-variable rational functions in S0,S1,S2,
    homogeneous of degree 0."""
    for b in boundary_ids:
        if b not in P2_LINES:
            raise InputError(f"unknown P2 boundary component {b!r}")
    for comp in witt_hom.comps:
        for poly in (comp.num, comp.den):
            degs = {sum(e) for e in poly.terms}
            if len(degs) > 1:
                raise InputError("P2 components must be homogeneous")
        if not comp.is_zero():
            dn = sum(next(iter(comp.num.terms)))
            dd = sum(next(iter(comp.den.terms)))
            if dn != dd:
                raise InputError("P2 components must have homogeneous degree 0")

    charts = {}
    witt_by_chart = {}
    for cn in ("U0", "U1", "U2"):
        ax = _P2_CHART_AXES[cn]
        bnd = tuple(a if a in boundary_ids else None for a in ax)
        charts[cn] = Chart(cn, _P2_VAR_NAMES[cn], bnd, gf)
        images = _p2_chart_images(gf, cn)
        witt_by_chart[cn] = witt_hom.subs(images)
    homes = {}
    for b in boundary_ids:
        homes[b] = [
            (cn, _P2_CHART_AXES[cn].index(b))
            for cn in ("U0", "U1", "U2")
            if b in _P2_CHART_AXES[cn]
        ]
    model = SurfaceModel(
        "P2", gf, s, boundary_ids, tame_ids, witt_by_chart, charts, homes
    )
    _validate_polar_locus(model)
    _check_chart_overlaps(model, witt_hom)
    return model


def _validate_polar_locus(model: SurfaceModel):
    """Every component's polar divisor must be contained in the declared
    boundary, on every chart."""
    for cn, w in model.witt_by_chart.items():
        chart = model.charts[cn]
        for comp in w.comps:
            if comp.is_zero():
                continue
            den = comp.den
            for axis in (0, 1):
                v = den.axis_valuation(axis)
                if v > 0 and chart.boundary[axis] is None:
                    raise PolarLocusOutsideBoundary(
                        f"pole along {chart.var_names[axis]}=0 on chart {cn} "
                        f"is outside the declared boundary"
                    )
            # any non-monomial denominator factor is a pole off the axes
            stripped = den
            for axis in (0, 1):
                v = int(stripped.axis_valuation(axis))
                if v > 0:
                    stripped = stripped.shift_axis(axis, -v)
            if not stripped.is_constant():
                raise PolarLocusOutsideBoundary(
                    f"pole along a non-boundary curve on chart {cn}"
                )


def _check_chart_overlaps(model: SurfaceModel, witt_hom: WittVec):
    """Transported components must agree on chart overlaps: both come from
    the same homogeneous expression, so this is a sanity assertion."""
    # U0 -> U1 on the overlap: (T1, T2) = (1/u0, u2/u0)
    gf = model.gf
    u0 = RatFunc.var(gf, 2, 0)
    u2 = RatFunc.var(gf, 2, 1)
    images = [RatFunc.one(gf, 2) / u0, u2 / u0]
    w0 = model.witt_by_chart["U0"]
    w1 = model.witt_by_chart["U1"]
    for a, b in zip(w0.comps, w1.comps):
        assert a.subs(images) == b, "chart transport mismatch on U0/U1 overlap"


def to_univariate(f: RatFunc, keep_var: int) -> RatFunc:
    """Forget the other variable of a 2-variable function constant in it."""
    assert f.nvars == 2
    gf = f.gf
    other = 1 - keep_var
    assert f.num.degree(other) <= 0 and f.den.degree(other) <= 0

    def conv(p: Poly) -> Poly:
        return Poly(gf, 1, {(e[keep_var],): c for e, c in p.terms.items()})

    return RatFunc(conv(f.num), conv(f.den), normalize=False)


def from_univariate(f: RatFunc, into_var: int, gf: GF) -> RatFunc:
    assert f.nvars == 1

    def conv(p: Poly) -> Poly:
        out = {}
        for e, c in p.terms.items():
            ee = [0, 0]
            ee[into_var] = e[0]
            out[tuple(ee)] = c
        return Poly(gf, 2, out)

    return RatFunc(conv(f.num), conv(f.den), normalize=False)
