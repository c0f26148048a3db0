"""
组合算法模块
包含置换群（Schreier-Sims）、关联结构自同构回溯搜索与子集轨道枚举
"""
from .permutations import Perm, PermGroup, StabilizerChain, orbit_of
from .automorphism import IncidenceAutomorphismSearch, AutomorphismSearchResult
from .orbits import set_orbits, count_set_orbits

__all__ = [
    'Perm',
    'PermGroup',
    'StabilizerChain',
    'orbit_of',
    'IncidenceAutomorphismSearch',
    'AutomorphismSearchResult',
    'set_orbits',
    'count_set_orbits'
]
