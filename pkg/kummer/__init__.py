"""
Kummer 16_6 构型模块
包含 theta / grid 两个组合模型、不变量校验、自同构群与轨道分析
"""
from .incidence import (
    Incidence16_6,
    build_theta_model,
    build_grid_model,
    grid_index,
    verify_incidence,
    count_offtrope_triples,
    offtrope_triples,
    ontrope_triples,
    check_triple_partition,
    node_pair_count
)
from .symmetry import (
    automorphism_search,
    automorphism_group,
    trope_action,
    check_transitivity,
    trope_stabilizer_actions,
    theta_relabelings,
    grid_symmetry_generators,
    grid_offtrope_orbit_count,
    grid_ontrope_orbit_count,
    ontrope_triple_orbit_count,
    offtrope_triple_orbit_count
)
from .export import to_ascii_bitmap, to_json_dict

__all__ = [
    'Incidence16_6',
    'build_theta_model',
    'build_grid_model',
    'grid_index',
    'verify_incidence',
    'count_offtrope_triples',
    'offtrope_triples',
    'ontrope_triples',
    'check_triple_partition',
    'node_pair_count',
    'automorphism_search',
    'automorphism_group',
    'trope_action',
    'check_transitivity',
    'trope_stabilizer_actions',
    'theta_relabelings',
    'grid_symmetry_generators',
    'grid_offtrope_orbit_count',
    'grid_ontrope_orbit_count',
    'ontrope_triple_orbit_count',
    'offtrope_triple_orbit_count',
    'to_ascii_bitmap',
    'to_json_dict'
]
