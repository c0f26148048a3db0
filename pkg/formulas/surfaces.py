"""
曲面公式
P^3 中曲面的 Severi 次数与带 A1/A2 奇点的对偶曲面次数
"""
from config.models import SeveriDegreeInput
from kernel.errors import ContractViolation, OutOfRangeError, UnsupportedDeltaError
from kernel.rational import exact_div

from .inputs import require_int, validated

# 三次曲面上不经过奇点的直线数，键为 (A1 个数, A2 个数)
_CUBIC_LINES_AVOIDING_SINGULARITY = {
    (0, 0): 27,
    (1, 0): 15,
    (0, 1): 9,
}


def severi_degree(k: int, delta: int) -> int:
    """
    k 次一般曲面的 δ 节点平面截线所成 Severi 簇的次数

    Args:
        k: 曲面次数 (≥ 2)
        delta: 节点个数 (1, 2, 3)

    Returns:
        int: d_{δ,k}

    Raises:
        UnsupportedDeltaError: delta 不在 {1, 2, 3}
        ContractViolation: k < 2
    """
    if isinstance(delta, bool) or delta not in (1, 2, 3):
        raise UnsupportedDeltaError(delta)
    validated(SeveriDegreeInput, k=require_int("k", k), delta=delta)

    if delta == 1:
        return k * (k - 1) ** 2
    if delta == 2:
        return exact_div(
            k * (k - 1) * (k - 2) * (k ** 3 - k ** 2 + k - 12), 2, f"d_2,{k}"
        )
    tail = (k ** 7 - 4 * k ** 6 + 7 * k ** 5 - 45 * k ** 4 + 114 * k ** 3
            - 111 * k ** 2 + 548 * k - 960)
    return exact_div(k * (k - 2) * tail, 6, f"d_3,{k}")


def dual_surface_degree(k: int, nu: int, kappa: int) -> int:
    """k 次曲面带 ν 个 A1 与 κ 个 A2 奇点时对偶曲面的次数 k(k-1)^2 - 2ν - 3κ"""
    require_int("k", k, 2)
    require_int("nu", nu, 0)
    require_int("kappa", kappa, 0)
    value = k * (k - 1) ** 2 - 2 * nu - 3 * kappa
    if value < 0:
        raise OutOfRangeError(f"对偶曲面次数为负: k={k}, ν={nu}, κ={kappa} → {value}")
    return value


def cubic_surface_line_count(nu: int, kappa: int) -> int:
    """
    三次曲面上不经过奇点的直线条数

    只收录光滑、单个 A1、单个 A2 三种情形。
    """
    key = (require_int("nu", nu, 0), require_int("kappa", kappa, 0))
    if key not in _CUBIC_LINES_AVOIDING_SINGULARITY:
        raise ContractViolation(
            f"未收录的三次曲面奇点类型 ν={nu}, κ={kappa}，"
            f"可用: {sorted(_CUBIC_LINES_AVOIDING_SINGULARITY)}"
        )
    return _CUBIC_LINES_AVOIDING_SINGULARITY[key]
