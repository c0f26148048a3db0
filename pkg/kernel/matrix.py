"""
有理矩阵与精确线性代数谓词
秩与行列式均使用 Bareiss 无分数消元
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import ContractViolation
from .rational import as_rational


@dataclass(frozen=True)
class RatMatrix:
    """行优先存储的有理矩阵"""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ContractViolation(f"矩阵尺寸必须为正: {self.rows}×{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ContractViolation(
                f"元素个数 {len(self.entries)} 与尺寸 {self.rows}×{self.cols} 不符"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ContractViolation("矩阵不能为空")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ContractViolation("各行长度不一致")
        entries = tuple(as_rational(x) for r in rows for x in r)
        return cls(len(rows), width, entries)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]


def _integer_rows(m: RatMatrix) -> tuple[list[list[int]], Fraction]:
    """每行乘以分母的最小公倍数化为整数行，返回 (整数行, 缩放因子乘积的倒数)"""
    out = []
    scale = Fraction(1)
    for i in range(m.rows):
        row = m.row(i)
        den = lcm(*(x.denominator for x in row))
        out.append([x.numerator * (den // x.denominator) for x in row])
        scale /= den
    return out, scale


def _bareiss(a: list[list[int]]) -> tuple[int, int, int]:
    """
    原地执行 Bareiss 消元

    Returns:
        (秩, 行交换符号, 最后一个主元)
    """
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    sign = 1
    prev = 1
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
            sign = -sign
        p = a[r][c]
        for i in range(r + 1, n_rows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, n_cols):
                # Sylvester 恒等式保证整除
                row_i[j] = (row_i[j] * p - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, sign, prev


def rank(m: RatMatrix) -> int:
    """精确秩"""
    a, _ = _integer_rows(m)
    return _bareiss(a)[0]


def det(m: RatMatrix) -> Fraction:
    """精确行列式；非方阵报错"""
    if m.rows != m.cols:
        raise ContractViolation(f"行列式需要方阵，实际为 {m.rows}×{m.cols}")
    a, scale = _integer_rows(m)
    r, sign, last = _bareiss(a)
    if r < m.rows:
        return Fraction(0)
    return sign * last * scale


def rank_of(rows: Sequence[Sequence]) -> int:
    """对行列表直接求秩的便捷函数"""
    return rank(RatMatrix.from_rows(rows))


def det_of(rows: Sequence[Sequence]) -> Fraction:
    return det(RatMatrix.from_rows(rows))


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """整数矩阵的秩，省去有理数转换"""
    return _bareiss([list(r) for r in rows])[0]


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """整数方阵的行列式"""
    a = [list(r) for r in rows]
    if any(len(r) != len(a) for r in a):
        raise ContractViolation("行列式需要方阵")
    r, sign, last = _bareiss(a)
    return sign * last if r == len(a) else 0
