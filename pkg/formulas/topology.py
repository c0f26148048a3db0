"""
拓扑公式
曲面束的 Euler 示性数预算
"""
from config.models import PencilBudget


def pencil_nodal_count(budget: PencilBudget) -> int:
    """
    曲面束中剩余的单结点纤维个数

    χ(S) = χ(F)χ(B) + Σ(χ(F_b) - χ(F))，每个未列出的结点纤维贡献 +1。
    调用方需把所有非结点型特殊纤维放入 special_fibres。
    """
    remaining = budget.chi_surface - budget.chi_generic_fibre * budget.chi_base
    for chi in budget.special_fibres:
        remaining -= chi - budget.chi_generic_fibre
    return remaining
