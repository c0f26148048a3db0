"""
曲线公式
平面曲线的 Plücker 公式、de Jonquières 切触次数以及二次曲面上曲线的不变量
"""
from config.models import PluckerInput
from kernel.errors import ContractViolation, InconsistentInputError, OutOfRangeError
from kernel.sparse_poly import SparsePoly, coefficient, poly_mul, poly_pow

from .inputs import require_int, validated

_UV = ("u", "v")


def _plane_curve(d: int, delta: int, kappa: int) -> PluckerInput:
    return validated(
        PluckerInput,
        d=require_int("d", d),
        delta=require_int("delta", delta),
        kappa=require_int("kappa", kappa),
    )


def plucker_dual_degree(d: int, delta: int, kappa: int) -> int:
    """对偶曲线次数（类数）d(d-1) - 2δ - 3κ"""
    c = _plane_curve(d, delta, kappa)
    value = c.d * (c.d - 1) - 2 * c.delta - 3 * c.kappa
    if value < 0:
        raise OutOfRangeError(f"对偶次数为负: ({d}, {delta}, {kappa}) → {value}")
    return value


def plucker_flexes(d: int, delta: int, kappa: int) -> int:
    """拐点个数 3d(d-2) - 6δ - 8κ"""
    c = _plane_curve(d, delta, kappa)
    value = 3 * c.d * (c.d - 2) - 6 * c.delta - 8 * c.kappa
    if value < 0:
        raise OutOfRangeError(f"拐点个数为负: ({d}, {delta}, {kappa}) → {value}")
    return value


def plucker_bitangents(d: int, delta: int, kappa: int) -> int:
    """
    双切线条数，即对偶曲线的结点数 δ*

    由 d = d*(d*-1) - 2δ* - 3ι* 解出，其中 d* 为对偶次数、ι* 为原曲线的拐点数。

    Raises:
        InconsistentInputError: δ* 不是非负整数
    """
    d_star = plucker_dual_degree(d, delta, kappa)
    iota = plucker_flexes(d, delta, kappa)
    twice = d_star * (d_star - 1) - 3 * iota - d
    if twice < 0 or twice % 2:
        raise InconsistentInputError(
            f"对偶 Plücker 关系无非负整数解: ({d}, {delta}, {kappa}), 2δ*={twice}"
        )
    return twice // 2


def dejonquieres(d: int, g: int, tau: int) -> int:
    """
    与 d 次、亏格 g 的曲线在 τ 个点相切的超平面族的次数

    取 (1+4u+v)^g (1+2u+v)^(d-τ-g) 中 u^τ v^(d-2τ) 的系数。

    Args:
        d: 曲线次数
        g: 曲线亏格
        tau: 切点个数，要求 2τ < d

    Returns:
        int: 次数

    Raises:
        ContractViolation: 前置条件不满足
    """
    require_int("d", d)
    require_int("g", g, 0)
    require_int("tau", tau, 0)
    if 2 * tau >= d:
        raise ContractViolation(f"需要 2τ < d，实际 d={d}, τ={tau}")
    if d - tau - g < 0:
        raise ContractViolation(f"需要 d - τ - g ≥ 0，实际 d={d}, g={g}, τ={tau}")

    genus_part = SparsePoly.linear(_UV, 1, {"u": 4, "v": 1})
    rational_part = SparsePoly.linear(_UV, 1, {"u": 2, "v": 1})
    generating = poly_mul(poly_pow(genus_part, g), poly_pow(rational_part, d - tau - g))
    return coefficient(generating, (tau, d - 2 * tau))


def polar_tangency_correction(base: int, correction: int) -> int:
    """去掉重数为 2 的多余交点：base - 2·correction"""
    require_int("base", base)
    require_int("correction", correction, 0)
    value = base - 2 * correction
    if value < 0:
        raise ContractViolation(f"需要 base ≥ 2·correction，实际 base={base}, correction={correction}")
    return value


def quadric_curve_invariants(a: int, b: int) -> tuple[int, int]:
    """光滑二次曲面上 (a, b) 型光滑连通曲线的 (次数, 亏格)"""
    require_int("a", a, 1)
    require_int("b", b, 1)
    return a + b, (a - 1) * (b - 1)


def tangent_scroll_degree(a: int, b: int) -> int:
    """与二次曲面上 (a, b) 型曲线相切的平面所成直纹面的次数"""
    degree, genus = quadric_curve_invariants(a, b)
    return dejonquieres(degree, genus, 1)


def double_quadric_tangent_curve_degree() -> int:
    # 二次锥上与二次截线相切的平面构成 2 次锥，再与 (3,3) 曲线的切平面直纹面相交
    return 2 * tangent_scroll_degree(3, 3)


def branch_curve_tangent_degrees() -> tuple[int, int, int]:
    """F_4 分量到二次锥的二重覆盖，其分支曲线为 8 次有理曲线；返回 τ=1,2,3 的切平面次数"""
    degree, genus = 8, 0
    return tuple(dejonquieres(degree, genus, tau) for tau in (1, 2, 3))
