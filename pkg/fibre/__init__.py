"""
中心纤维模块
曲面相交格的爆破计算、对偶复形数据模型、三重点公式检查与 Kummer 纤维
"""
from .presentation import BlowUp, SurfacePresentation, self_intersection, curve_self_intersection
from .graph import (
    FibreComponent,
    CurveSide,
    TriplePoint,
    DoubleCurve,
    FibreGraph,
    CurveCheck,
    TriplePointReport,
    check_triple_point_formula,
    fibre_to_json,
    load_fibre,
    mutate_drop_triple_point
)
from .kummer_fibre import K3_COMPONENT, build_kummer_fibre, build_synthetic_weighted_fibre

__all__ = [
    'BlowUp',
    'SurfacePresentation',
    'self_intersection',
    'curve_self_intersection',
    'FibreComponent',
    'CurveSide',
    'TriplePoint',
    'DoubleCurve',
    'FibreGraph',
    'CurveCheck',
    'TriplePointReport',
    'check_triple_point_formula',
    'fibre_to_json',
    'load_fibre',
    'mutate_drop_triple_point',
    'K3_COMPONENT',
    'build_kummer_fibre',
    'build_synthetic_weighted_fibre'
]
