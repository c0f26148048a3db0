"""
有理数工具
基于 fractions.Fraction：始终约分、分母为正，相等即结构相等
"""
from fractions import Fraction
from numbers import Integral, Rational as _RationalABC

from .errors import ContractViolation, InternalConsistencyError

Rational = Fraction


def as_rational(value) -> Fraction:
    """
    将整数或有理数转换为 Fraction

    浮点数与布尔值一律拒绝，避免引入不精确的数值。
    """
    if isinstance(value, bool):
        raise ContractViolation(f"布尔值不能作为有理数: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Integral, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError as e:
            raise ContractViolation(f"无法解析的有理数字符串: {value!r}") from e
    raise ContractViolation(f"不支持的数值类型 {type(value).__name__}: {value!r}")


def rational_str(value: Fraction) -> str:
    """输出与区域设置无关的有理数文本，如 '3' 或 '-7/12'"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def exact_div(numerator: int, denominator: int, context: str = "") -> int:
    """整数精确除法；不能整除时立即报错"""
    q, r = divmod(numerator, denominator)
    if r != 0:
        raise InternalConsistencyError(
            f"{context or '整数除法'}: {numerator} 不能被 {denominator} 整除"
        )
    return q
