"""
分量账本模块
四面体、三角形、单值曲面与 Kummer 退化的账本构建器
"""
from .base import LedgerBuilderBase
from .derivation import Const, Call, Product, Derivation
from .tetrahedron import TetrahedronLedgerBuilder, enumerate_ledger
from .triangle import (
    TriangleEntry,
    TriangleLedgerBuilder,
    ledger,
    triangle_entries,
    riemann_hurwitz_branch_count,
    perfect_matching_count,
    ordered_pair_splits
)
from .monoid import (
    MonoidLedgerBuilder,
    PencilAuditBuilder,
    monoid_crude_limit,
    general_point_audit,
    monoid_residual_degree
)
from .kummer import KummerLedgerBuilder, kummer_ledger

__all__ = [
    'LedgerBuilderBase',
    'Const',
    'Call',
    'Product',
    'Derivation',
    'TetrahedronLedgerBuilder',
    'enumerate_ledger',
    'TriangleEntry',
    'TriangleLedgerBuilder',
    'ledger',
    'triangle_entries',
    'riemann_hurwitz_branch_count',
    'perfect_matching_count',
    'ordered_pair_splits',
    'MonoidLedgerBuilder',
    'PencilAuditBuilder',
    'monoid_crude_limit',
    'general_point_audit',
    'monoid_residual_degree',
    'KummerLedgerBuilder',
    'kummer_ledger'
]
