"""
经典计数公式模块
包含 Severi 次数、对偶曲面次数、Plücker 公式、de Jonquières 次数与 Euler 示性数预算
"""
from .surfaces import severi_degree, dual_surface_degree, cubic_surface_line_count
from .curves import (
    plucker_dual_degree,
    plucker_flexes,
    plucker_bitangents,
    dejonquieres,
    polar_tangency_correction,
    quadric_curve_invariants,
    tangent_scroll_degree,
    double_quadric_tangent_curve_degree,
    branch_curve_tangent_degrees
)
from .topology import pencil_nodal_count

__all__ = [
    'severi_degree',
    'dual_surface_degree',
    'cubic_surface_line_count',
    'plucker_dual_degree',
    'plucker_flexes',
    'plucker_bitangents',
    'dejonquieres',
    'polar_tangency_correction',
    'quadric_curve_invariants',
    'tangent_scroll_degree',
    'double_quadric_tangent_curve_degree',
    'branch_curve_tangent_degrees',
    'pencil_nodal_count'
]
