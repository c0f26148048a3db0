"""
三角形退化的分量账本
经过三角形 12 个点的四次曲面：每个 P-次数都附带可重新求值的推导表达式
"""
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from config.defaults import TRIANGLE_TOTALS
from config.models import ComponentLedger, LedgerEntry, PencilBudget
from formulas import (
    cubic_surface_line_count,
    dual_surface_degree,
    pencil_nodal_count,
    plucker_dual_degree,
    plucker_flexes,
    polar_tangency_correction
)
from kernel.errors import ContractViolation, InternalConsistencyError

from .base import LedgerBuilderBase
from .derivation import Call, Const, Derivation, Product


def riemann_hurwitz_branch_count(degree_n: int, genus_source: int = 0, genus_target: int = 0) -> int:
    """
    n 次覆盖 C → D 的单分支点个数

    2g(C) - 2 = n(2g(D) - 2) + b；两端都是 P^1 时 b = 2n - 2。
    """
    if isinstance(degree_n, bool) or not isinstance(degree_n, int) or degree_n < 1:
        raise ContractViolation(f"覆盖次数必须为正整数: {degree_n!r}")
    branch = 2 * genus_source - 2 - degree_n * (2 * genus_target - 2)
    if branch < 0:
        raise ContractViolation(
            f"分支点个数为负: n={degree_n}, g={genus_source}, g'={genus_target}"
        )
    return branch


def perfect_matching_count(n: int) -> int:
    """a 上 n 个点与 b 上 n 个点之间的完美匹配数（枚举）"""
    return sum(1 for _ in permutations(range(n)))


def ordered_pair_splits(n: int) -> int:
    """把 n 个点分成有序的两组、每组 n/2 个的方式数（枚举第一组）"""
    if n % 2:
        raise ContractViolation(f"点数必须为偶数: {n}")
    return sum(1 for _ in combinations(range(n), n // 2))


# 三次曲面 X_P 带一个 A2 点；C_E 为结点平面三次曲线
_DUAL_XP = Call(dual_surface_degree, (3, 0, 1))
_SPLIT_RULINGS = Const(4, "rulings through one of the four points of Z_W on c_0")
_G12_TANGENTS = Const(2, "curves tangent to E in a pencil cutting a g^1_2")
_LINES_A = Const(3, "points of Z_P on a")
_LINES_B = Const(3, "points of Z_P on b")
_NODAL_CUBIC = (3, 1, 0)


@dataclass(frozen=True)
class TriangleEntry:
    """三角形账本中的一项"""

    label: str
    p_degree: int
    multiplicity: int
    derivation: Derivation

    def check(self) -> None:
        if self.multiplicity not in (1, 2, 3):
            raise InternalConsistencyError(f"{self.label} 的重数 {self.multiplicity} 不在 {{1,2,3}}")
        value = self.derivation.evaluate()
        if value != self.p_degree:
            raise InternalConsistencyError(
                f"{self.label} 的推导 {self.derivation.describe()} = {value}，声明为 {self.p_degree}"
            )

    def to_ledger_entry(self) -> LedgerEntry:
        return LedgerEntry(
            label=self.label,
            count=self.p_degree,
            multiplicity=self.multiplicity,
            provenance=self.derivation.describe(),
        )


TRIANGLE_ENTRIES: dict[int, list[TriangleEntry]] = {
    1: [
        TriangleEntry("V(δ_P̃=1)", 9, 1, _DUAL_XP),
        TriangleEntry("V(δ_W̄=1)", 4, 1, _SPLIT_RULINGS),
        TriangleEntry("V(τ_{E,2}=1)", 4, 2, Call(riemann_hurwitz_branch_count, (3,))),
    ],
    2: [
        TriangleEntry("V(δ_P̃=2)", 9, 1, Call(cubic_surface_line_count, (0, 1))),
        TriangleEntry("V(δ_W̄=2)", 6, 1, Call(comb, (4, 2))),
        TriangleEntry("V(δ_P̃=δ_W̄=1)", 36, 1, Product((_SPLIT_RULINGS, _DUAL_XP))),
        TriangleEntry(
            "V(δ_P̃=τ_{E,2}=1)", 28, 2,
            Call(polar_tangency_correction, (
                Product((_DUAL_XP, Call(plucker_dual_degree, _NODAL_CUBIC))),
                Const(4, "degree of the polar component along C_E"),
            )),
        ),
        TriangleEntry("V(δ_W̄=τ_{E,2}=1)", 8, 2, Product((_SPLIT_RULINGS, _G12_TANGENTS))),
        TriangleEntry("V(τ_{E,3}=1)", 3, 3, Call(plucker_flexes, _NODAL_CUBIC)),
        TriangleEntry("V(W̄+W_a+W_b, δ_W̄=2)", 0, 1, Const(0, "twisted system trivial on P̃")),
    ],
    3: [
        TriangleEntry("V(δ_P̃=3)", 6, 1, Call(perfect_matching_count, (3,))),
        TriangleEntry("V(δ_P̃=2, δ_W̄=1)", 36, 1, Product((_LINES_A, _LINES_B, _SPLIT_RULINGS))),
        TriangleEntry("V(δ_P̃=1, δ_W̄=2)", 54, 1, Product((Call(comb, (4, 2)), _DUAL_XP))),
        TriangleEntry("V(δ_P̃=2, τ_{E,2}=1)", 18, 2, Product((_LINES_A, _LINES_B, _G12_TANGENTS))),
        TriangleEntry(
            "V(δ_P̃=δ_W̄=τ_{E,2}=1)", 56, 2,
            Product((_SPLIT_RULINGS, _G12_TANGENTS, Call(
                pencil_nodal_count,
                (PencilBudget(chi_surface=12, chi_generic_fibre=0, chi_base=2, special_fibres=[3, 2]),),
            ))),
        ),
        TriangleEntry(
            "V(δ_P̃=τ_{E,3}=1)", 18, 3,
            Product((Call(plucker_flexes, _NODAL_CUBIC), Call(
                pencil_nodal_count,
                (PencilBudget(chi_surface=12, chi_generic_fibre=0, chi_base=2, special_fibres=[3, 3]),),
            ))),
        ),
        TriangleEntry("V(W̄+W_a+W_b, δ_W̄=3)", 6, 1, Call(ordered_pair_splits, (4,))),
    ],
}


class TriangleLedgerBuilder(LedgerBuilderBase):
    """三角形退化账本构建器"""

    family = "triangle"

    def build(self, delta: int) -> ComponentLedger:
        self._check_delta(delta)
        entries = TRIANGLE_ENTRIES[delta]
        for entry in entries:
            entry.check()
        positive = [e.to_ledger_entry() for e in entries if e.p_degree > 0]
        null = [e.to_ledger_entry() for e in entries if e.p_degree == 0]
        return self._assemble(f"V_{delta}(triangle)", TRIANGLE_TOTALS[delta], positive, null)


def ledger(delta: int) -> ComponentLedger:
    """返回三角形退化 δ 的账本（构建时重新求值所有推导）"""
    return TriangleLedgerBuilder().build(delta)


def triangle_entries(delta: int) -> list[TriangleEntry]:
    LedgerBuilderBase._check_delta(delta)
    return list(TRIANGLE_ENTRIES[delta])
