"""
P^3 中的精确射影几何
点与平面均以首个非零坐标为 1 的规范形式存储，所有关联判定都走精确秩与行列式
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

from kernel.errors import ContractViolation
from kernel.matrix import integer_det, integer_rank
from kernel.rational import as_rational, rational_str

DIMENSION = 4


def _normalize(values: Sequence) -> tuple[Fraction, ...]:
    vals = tuple(as_rational(v) for v in values)
    if len(vals) != DIMENSION:
        raise ContractViolation(f"齐次坐标必须有 {DIMENSION} 个分量，实际为 {len(vals)}")
    lead = next((v for v in vals if v != 0), None)
    if lead is None:
        raise ContractViolation("齐次坐标不能全为零")
    return tuple(v / lead for v in vals)


def _primitive(vals: Sequence[Fraction]) -> tuple[int, ...]:
    den = lcm(*(v.denominator for v in vals))
    ints = [v.numerator * (den // v.denominator) for v in vals]
    g = gcd(*ints)
    return tuple(i // g for i in ints)


@dataclass(frozen=True)
class ProjPoint:
    """P^3 中的点"""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize(self.coords))

    @classmethod
    def of(cls, *coords) -> "ProjPoint":
        return cls(tuple(coords))

    @cached_property
    def integer_coords(self) -> tuple[int, ...]:
        """同一点的本原整数代表元，用于无分数消元"""
        return _primitive(self.coords)

    def __str__(self):
        return "(" + ":".join(rational_str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ProjPlane:
    """P^3 中的平面 Σ a_i x_i = 0"""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def of(cls, *coeffs) -> "ProjPlane":
        return cls(tuple(coeffs))

    def contains(self, point: ProjPoint) -> bool:
        return sum(a * x for a, x in zip(self.coeffs, point.coords)) == 0

    def points_on(self, points: Iterable[ProjPoint]) -> list[ProjPoint]:
        return [p for p in points if self.contains(p)]

    def __str__(self):
        return "[" + ":".join(rational_str(c) for c in self.coeffs) + "]"


def coordinate_point(i: int) -> ProjPoint:
    """第 i 个坐标点 e_i（0 起始）"""
    return ProjPoint(tuple(1 if j == i else 0 for j in range(DIMENSION)))


def coordinate_plane(i: int) -> ProjPlane:
    """坐标平面 x_i = 0（0 起始）"""
    return ProjPlane(tuple(1 if j == i else 0 for j in range(DIMENSION)))


def span_rank(points: Sequence[ProjPoint]) -> int:
    """点集张成的线性子空间的维数 + 1"""
    if not points:
        return 0
    return integer_rank([p.integer_coords for p in points])


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return span_rank([p, q, r]) <= 2


def coplanar(points: Sequence[ProjPoint]) -> bool:
    if len(points) == DIMENSION:
        return integer_det([p.integer_coords for p in points]) == 0
    return span_rank(points) <= 3


def plane_through(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> ProjPlane:
    """
    经过三个不共线点的平面

    系数取 3×4 矩阵删去各列后的带符号 3 阶子式。

    Raises:
        ContractViolation: 三点共线
    """
    rows = [p.integer_coords, q.integer_coords, r.integer_coords]
    coeffs = []
    for j in range(DIMENSION):
        minor = [[row[c] for c in range(DIMENSION) if c != j] for row in rows]
        coeffs.append((-1) ** j * integer_det(minor))
    if all(c == 0 for c in coeffs):
        raise ContractViolation(f"三点共线，无法确定平面: {p}, {q}, {r}")
    return ProjPlane(tuple(coeffs))
