"""
射影几何模块
包含精确的点、平面谓词，四面体构型构造与一般性检验
"""
from .projective import (
    ProjPoint,
    ProjPlane,
    coordinate_point,
    coordinate_plane,
    span_rank,
    collinear,
    coplanar,
    plane_through
)
from .tetrahedron import (
    Edge,
    EdgePoint,
    TetraConfig,
    all_edges,
    build_config,
    build_config_from_parameters,
    random_parameters
)
from .genericity import verify_genericity, is_generic_triple

__all__ = [
    'ProjPoint',
    'ProjPlane',
    'coordinate_point',
    'coordinate_plane',
    'span_rank',
    'collinear',
    'coplanar',
    'plane_through',
    'Edge',
    'EdgePoint',
    'TetraConfig',
    'all_edges',
    'build_config',
    'build_config_from_parameters',
    'random_parameters',
    'verify_genericity',
    'is_generic_triple'
]
