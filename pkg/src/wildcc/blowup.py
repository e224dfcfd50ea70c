"""Blow-ups at closed boundary points and resolution of non-clean points.

Each blow-up keeps the two standard charts; only the neighbourhood of the
exceptional curve is re-analyzed (everything away from the center is
untouched by the blow-up and keeps its parent-level data).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .field import GF
from .geometry import Chart, Place, SurfaceModel, origin_place
from .poly import Poly, RatFunc
from .ram import Analysis, ChartAnalysis, DivisorRam, InvariantViolation
from .witt import WittVec


class CenterNotRational(ValueError):
    """Blow-up center of degree > 1 with scalar extension disabled."""


class DepthExceeded(RuntimeError):
    """Resolution did not terminate within the depth cap (signals a bug)."""


@dataclass
class BlowUpRecord:
    e_id: str
    parent_chart: Chart
    center: Place            # on the parent chart, degree 1
    host_axis: int           # center lies on the divisor t_host = 0
    gamma: int               # center = (t_host = 0, t_other = gamma)
    crossing: bool           # both parent axes are boundary through the center
    chart_a: Chart           # t_host = u,   t_other = u*v + gamma ; E = (u)
    chart_b: Chart           # t_host = u*v, t_other = v + gamma   ; E = (v)


@dataclass
class TowerNode:
    record: BlowUpRecord
    ca_a: ChartAnalysis
    ca_b: ChartAnalysis
    e_ram: DivisorRam

    @property
    def e_id(self) -> str:
        return self.record.e_id


def blow_up(parent_ca: ChartAnalysis, center: Place, e_id: str) -> TowerNode:
    chart = parent_ca.chart
    gf = chart.gf
    if center.degree != 1:
        raise CenterNotRational(
            f"blow-up center of degree {center.degree}; extend scalars first"
        )
    host = center.axis
    other = 1 - host
    assert chart.boundary[host] == center.divisor
    # pi = tau - gamma
    gamma = gf.neg(center.pi.terms.get((0,), 0))
    crossing = gamma == 0 and chart.boundary[other] is not None

    u = RatFunc.var(gf, 2, 0)
    v = RatFunc.var(gf, 2, 1)
    gconst = RatFunc.constant(gf, 2, gamma)
    images_a = [None, None]
    images_a[host] = u
    images_a[other] = u * v + gconst
    images_b = [None, None]
    images_b[host] = u * v
    images_b[other] = v + gconst

    bnd_a: list[Optional[str]] = [e_id, chart.boundary[other] if crossing else None]
    bnd_b: list[Optional[str]] = [chart.boundary[host], e_id]
    chart_a = Chart(f"{e_id}a", ("u", "v"), tuple(bnd_a), gf)
    chart_b = Chart(f"{e_id}b", ("u", "v"), tuple(bnd_b), gf)

    witt = parent_ca.witt
    ca_a = ChartAnalysis(chart_a, witt.subs(images_a))
    ca_b = ChartAnalysis(chart_b, witt.subs(images_b))

    e_a = ca_a.ram[0]
    e_b = ca_b.ram[1]
    if (e_a.sw, e_a.dt, e_a.type_, e_a.exceptional) != (
        e_b.sw,
        e_b.dt,
        e_b.type_,
        e_b.exceptional,
    ):
        raise InvariantViolation(f"exceptional {e_id}: charts disagree on invariants")
    # the proper transform keeps the parent conductor
    proper = ca_b.ram[0]
    parent_ram = parent_ca.ram[host]
    if (proper.sw, proper.dt, proper.type_) != (
        parent_ram.sw,
        parent_ram.dt,
        parent_ram.type_,
    ):
        raise InvariantViolation(
            f"proper transform of {center.divisor} changed its conductor"
        )
    if crossing:
        proper2 = ca_a.ram[1]
        parent2 = parent_ca.ram[other]
        if (proper2.sw, proper2.dt, proper2.type_) != (
            parent2.sw,
            parent2.dt,
            parent2.type_,
        ):
            raise InvariantViolation(
                f"proper transform of {chart.boundary[other]} changed its conductor"
            )

    rec = BlowUpRecord(
        e_id, chart, center, host, gamma, crossing, chart_a, chart_b
    )
    return TowerNode(rec, ca_a, ca_b, DivisorRam(e_id, e_a.sw, e_a.dt, e_a.type_, e_a.exceptional))


def e_places(node: TowerNode) -> list[Place]:
    """Canonical interesting places on the exceptional curve: all finite
    places in chart a plus the one point at u=0 of chart b (= E meets the
    proper transform of the host divisor)."""
    out: list[Place] = []
    rec = node.record
    gf = rec.chart_a.gf
    seen: set = set()

    def push(pl: Place):
        k = (pl.chart, pl.axis, pl.pi)
        if k not in seen:
            seen.add(k)
            out.append(pl)

    ca = node.ca_a
    if ca.ram[0].wild:
        for pi in ca.nonclean_places(0):
            push(Place(rec.chart_a.name, 0, rec.e_id, pi))
        for pi in ca.nondeg_failure_places(0):
            push(Place(rec.chart_a.name, 0, rec.e_id, pi))
        for pi in ca.xi_zero_places(0):
            push(Place(rec.chart_a.name, 0, rec.e_id, pi))
    if rec.crossing:
        push(origin_place(rec.chart_a, 0))
    # E meets the proper transform of the host divisor at chart b's origin
    push(Place(rec.chart_b.name, 1, rec.e_id, Poly.var(gf, 1, 0)))
    return out


def node_nonclean_places(node: TowerNode, analyses: dict[str, ChartAnalysis]) -> list[Place]:
    """Non-clean points in the exceptional neighbourhood of a node."""
    from .ram import point_report

    out = []
    for pl in e_places(node):
        ca = analyses[pl.chart]
        rep = point_report(ca, pl)
        if not rep.clean:
            out.append(pl)
    return out


@dataclass
class Resolution:
    analysis: Analysis
    nodes: list[TowerNode]
    chart_analyses: dict[str, ChartAnalysis]  # child charts by name
    centers: list[tuple[str, Place]]          # (e_id, center place)

    @property
    def depth(self) -> int:
        return len(self.nodes)

    def chart_analysis(self, chart_name: str) -> ChartAnalysis:
        got = self.chart_analyses.get(chart_name)
        if got is not None:
            return got
        return self.analysis.charts[chart_name]

    def node_of_chart(self, chart_name: str) -> Optional[TowerNode]:
        for node in self.nodes:
            if chart_name in (node.record.chart_a.name, node.record.chart_b.name):
                return node
        return None


def resolve(analysis: Analysis, depth_cap: int = 32, extra_centers: list[Place] = ()) -> Resolution:
    """Blow up non-clean points until every point of the tower is clean.

    extra_centers: additional (clean) points to blow up first; used by the
    resolution-independence checks."""
    nodes: list[TowerNode] = []
    centers: list[tuple[str, Place]] = []
    child_cas: dict[str, ChartAnalysis] = {}

    def analysis_for(chart_name: str) -> ChartAnalysis:
        if chart_name in child_cas:
            return child_cas[chart_name]
        return analysis.charts[chart_name]

    work: list[Place] = list(extra_centers) + analysis.nonclean_points()
    while work:
        if len(nodes) >= depth_cap:
            raise DepthExceeded(f"resolution exceeded depth cap {depth_cap}")
        center = work.pop(0)
        ca = analysis_for(center.chart)
        e_id = f"E{len(nodes) + 1}"
        node = blow_up(ca, center, e_id)
        nodes.append(node)
        centers.append((e_id, center))
        child_cas[node.record.chart_a.name] = node.ca_a
        child_cas[node.record.chart_b.name] = node.ca_b
        work.extend(node_nonclean_places(node, child_cas))
    return Resolution(analysis, nodes, child_cas, centers)
