"""
四面体构型
四个坐标平面、四个坐标点，以及每条棱上 4 个二重点（共 24 个）
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence

from config.defaults import TETRA_DEFAULTS
from kernel.errors import ContractViolation, GenericityError
from kernel.rational import as_rational
from utils import console

from .projective import DIMENSION, ProjPlane, ProjPoint, coordinate_plane, coordinate_point

POINTS_PER_EDGE = 4


@dataclass(frozen=True)
class Edge:
    """两个面 P_h, P_k 的交线，经过其余两个顶点"""

    faces: tuple[int, int]
    vertices: tuple[int, int]

    @property
    def label(self) -> str:
        h, k = self.faces
        return f"P{h + 1}P{k + 1}"

    def is_disjoint(self, other: "Edge") -> bool:
        return not set(self.vertices) & set(other.vertices)

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class EdgePoint:
    """
    棱上的二重点

    label 形如 "E+_12"：对应的例外曲线位于 P_1 内并与 P_2 相交。
    """

    label: str
    edge: Edge
    point: ProjPoint
    face: int
    meets: int
    parameter: Fraction


def all_edges() -> tuple[Edge, ...]:
    edges = []
    for h, k in combinations(range(DIMENSION), 2):
        rest = tuple(i for i in range(DIMENSION) if i not in (h, k))
        edges.append(Edge(faces=(h, k), vertices=rest))
    return tuple(edges)


def _edge_point_labels(edge: Edge) -> list[tuple[str, int, int]]:
    h, k = edge.faces
    labels = []
    for first, second in ((h, k), (k, h)):
        for sign in ("+", "-"):
            labels.append((f"E{sign}_{first + 1}{second + 1}", first, second))
    return labels


@dataclass(frozen=True)
class TetraConfig:
    """四面体退化的奇点构型"""

    faces: tuple[ProjPlane, ...]
    vertices: tuple[ProjPoint, ...]
    edges: tuple[Edge, ...]
    points: tuple[EdgePoint, ...]
    seed: int
    effective_seed: int

    @property
    def edge_points(self) -> dict[Edge, list[ProjPoint]]:
        mapping = {edge: [] for edge in self.edges}
        for ep in self.points:
            mapping[ep.edge].append(ep.point)
        return mapping

    def points_on_edge(self, edge: Edge) -> list[EdgePoint]:
        return [ep for ep in self.points if ep.edge == edge]

    def opposite_edge(self, edge: Edge) -> Edge:
        """与给定棱不相交的唯一一条棱"""
        found = [e for e in self.edges if e.is_disjoint(edge)]
        if len(found) != 1:
            raise ContractViolation(f"棱 {edge} 的对棱不唯一: {found}")
        return found[0]

    def on_edge_line(self, point: ProjPoint, edge: Edge) -> bool:
        h, k = edge.faces
        return self.faces[h].contains(point) and self.faces[k].contains(point)

    def common_edge(self, points: Sequence[ProjPoint]) -> Optional[Edge]:
        """所有点都落在同一条棱所在直线上时返回该棱"""
        for edge in self.edges:
            if all(self.on_edge_line(p, edge) for p in points):
                return edge
        return None

    def common_face(self, points: Sequence[ProjPoint]) -> Optional[int]:
        for i, face in enumerate(self.faces):
            if all(face.contains(p) for p in points):
                return i
        return None


def build_config_from_parameters(
    parameters: Mapping[tuple[int, int], Sequence],
    seed: int = 0,
    effective_seed: Optional[int] = None
) -> TetraConfig:
    """
    由每条棱上的 4 个有理参数构造构型（不做一般性检验）

    棱 (h, k) 的顶点为 e_i, e_j (i < j)，参数 t 对应点 e_i + t·e_j。

    Args:
        parameters: 面对 (h, k)（0 起始，h < k）到 4 个参数的映射
        seed: 请求的种子
        effective_seed: 实际使用的种子

    Returns:
        TetraConfig: 构型
    """
    edges = all_edges()
    points = []
    for edge in edges:
        values = parameters.get(edge.faces)
        if values is None or len(values) != POINTS_PER_EDGE:
            raise ContractViolation(f"棱 {edge} 需要恰好 {POINTS_PER_EDGE} 个参数")
        i, j = edge.vertices
        for (label, face, meets), t in zip(_edge_point_labels(edge), values):
            t = as_rational(t)
            coords = [0] * DIMENSION
            coords[i] = 1
            coords[j] = t
            points.append(EdgePoint(label, edge, ProjPoint(tuple(coords)), face, meets, t))
    return TetraConfig(
        faces=tuple(coordinate_plane(i) for i in range(DIMENSION)),
        vertices=tuple(coordinate_point(i) for i in range(DIMENSION)),
        edges=edges,
        points=tuple(points),
        seed=seed,
        effective_seed=seed if effective_seed is None else effective_seed,
    )


def random_parameters(seed: int, height: int) -> dict[tuple[int, int], list[Fraction]]:
    """每条棱取 4 个互不相同的非零有理参数，分子分母绝对值不超过 height"""
    rng = random.Random(seed)
    parameters = {}
    for edge in all_edges():
        chosen: list[Fraction] = []
        while len(chosen) < POINTS_PER_EDGE:
            numerator = rng.randint(1, height) * rng.choice((1, -1))
            t = Fraction(numerator, rng.randint(1, height))
            if t not in chosen:
                chosen.append(t)
        parameters[edge.faces] = chosen
    return parameters


def build_config(
    seed: int = TETRA_DEFAULTS["seed"],
    retry_budget: int = TETRA_DEFAULTS["retry_budget"],
    height: int = TETRA_DEFAULTS["parameter_height"]
) -> TetraConfig:
    """
    构造通过一般性检验的四面体构型

    检验失败时按固定步长扰动种子重试。

    Raises:
        GenericityError: 重试次数用尽
    """
    from .genericity import verify_genericity

    for attempt in range(retry_budget):
        effective = seed + attempt * TETRA_DEFAULTS["seed_step"]
        config = build_config_from_parameters(
            random_parameters(effective, height), seed=seed, effective_seed=effective
        )
        report = verify_genericity(config)
        if report.passed:
            console.done(f"种子 {seed} 的构型通过一般性检验（实际种子 {effective}）")
            return config
        console.warn(f"种子 {effective} 未通过一般性检验: {report.violations[:3]}")
    raise GenericityError(f"种子 {seed} 在 {retry_budget} 次重试内未得到一般构型")
