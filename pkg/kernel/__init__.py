"""
精确计算内核
包含有理数、稀疏多项式、有理矩阵谓词与异常定义
"""
from .errors import (
    EnumeraError,
    ContractViolation,
    UnsupportedDeltaError,
    OutOfRangeError,
    InconsistentInputError,
    GenericityError,
    SearchBudgetExceeded,
    InternalConsistencyError
)
from .rational import Rational, as_rational, rational_str, exact_div
from .sparse_poly import SparsePoly, poly_mul, poly_pow, coefficient
from .matrix import RatMatrix, rank, det, rank_of, det_of, integer_rank, integer_det

__all__ = [
    'EnumeraError',
    'ContractViolation',
    'UnsupportedDeltaError',
    'OutOfRangeError',
    'InconsistentInputError',
    'GenericityError',
    'SearchBudgetExceeded',
    'InternalConsistencyError',
    'Rational',
    'as_rational',
    'rational_str',
    'exact_div',
    'SparsePoly',
    'poly_mul',
    'poly_pow',
    'coefficient',
    'RatMatrix',
    'rank',
    'det',
    'rank_of',
    'det_of',
    'integer_rank',
    'integer_det'
]
