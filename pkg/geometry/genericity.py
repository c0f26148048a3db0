"""
一般性检验
确认构型中只存在棱与面强制出现的共线与共面关系
"""
from collections import Counter
from itertools import combinations

from config.models import GenericityReport

from .projective import ProjPoint, collinear, coplanar, plane_through
from .tetrahedron import TetraConfig


def _labelled_points(c: TetraConfig) -> list[tuple[str, ProjPoint]]:
    vertices = [(f"p{i + 1}", v) for i, v in enumerate(c.vertices)]
    return vertices + [(ep.label, ep.point) for ep in c.points]


def _check_incidence(c: TetraConfig, violations: list[str]) -> None:
    for ep in c.points:
        on_faces = [i for i, face in enumerate(c.faces) if face.contains(ep.point)]
        if tuple(on_faces) != ep.edge.faces:
            violations.append(
                f"{ep.label} 应恰好位于面 {ep.edge.faces} 上，实际位于 {tuple(on_faces)}"
            )
        if ep.point in c.vertices:
            violations.append(f"{ep.label} 与顶点重合: {ep.point}")
    counts = Counter(ep.point for ep in c.points)
    for point, n in counts.items():
        if n > 1:
            labels = [ep.label for ep in c.points if ep.point == point]
            violations.append(f"重合的棱上点 {labels}: {point}")


def _check_collinear(c: TetraConfig, violations: list[str]) -> int:
    labelled = _labelled_points(c)
    checked = 0
    for (la, a), (lb, b), (lc, cc) in combinations(labelled, 3):
        checked += 1
        if a == b or b == cc or a == cc:
            continue
        if c.common_edge([a, b, cc]) is not None:
            continue
        if collinear(a, b, cc):
            violations.append(f"非棱上的三点共线: {la}, {lb}, {lc}")
    return checked


def _forced_coplanar(c: TetraConfig, eps) -> bool:
    edge_counts = Counter(ep.edge for ep in eps)
    if max(edge_counts.values()) >= 3:
        return True
    return c.common_face([ep.point for ep in eps]) is not None


def _check_coplanar(c: TetraConfig, violations: list[str]) -> int:
    checked = 0
    for quad in combinations(c.points, 4):
        checked += 1
        if _forced_coplanar(c, quad):
            continue
        if len({ep.point for ep in quad}) < 4:
            continue
        if coplanar([ep.point for ep in quad]):
            violations.append("非强制的四点共面: " + ", ".join(ep.label for ep in quad))
    return checked


def is_generic_triple(c: TetraConfig, triple) -> bool:
    """三个点两两位于不同棱上，且三条棱不是同一个面的三条棱"""
    if len({ep.edge for ep in triple}) < 3:
        return False
    return c.common_face([ep.point for ep in triple]) is None


def _check_vertex_planes(c: TetraConfig, violations: list[str]) -> int:
    checked = 0
    for triple in combinations(c.points, 3):
        if not is_generic_triple(c, triple):
            continue
        points = [ep.point for ep in triple]
        if len(set(points)) < 3 or collinear(*points):
            continue
        checked += 1
        plane = plane_through(*points)
        on_plane = [f"p{i + 1}" for i, v in enumerate(c.vertices) if plane.contains(v)]
        if on_plane:
            violations.append(
                "经过三点的平面含有顶点 " + ", ".join(on_plane) + ": "
                + ", ".join(ep.label for ep in triple)
            )
    return checked


def verify_genericity(c: TetraConfig) -> GenericityReport:
    """
    检验构型的一般性

    (a) 除同一条棱上的点外没有三点共线（含顶点，共 28 点）；
    (b) 24 个棱上点中任意四点不共面，除非其中三点在同一条棱上或四点在同一个面上；
    (c) 经过两两异棱且不属于同一面的三点的平面不含顶点。

    Returns:
        GenericityReport: 违反项列表为空时通过
    """
    violations: list[str] = []
    _check_incidence(c, violations)
    checked = {
        "collinear_triples": _check_collinear(c, violations),
        "coplanar_quadruples": _check_coplanar(c, violations),
        "generic_planes": _check_vertex_planes(c, violations),
    }
    return GenericityReport(passed=not violations, violations=violations, checked=checked)
