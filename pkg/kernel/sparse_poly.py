"""
稀疏多元整系数多项式
以指数向量为键、非零整数系数为值；de Jonquières 生成函数在此展开
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import ContractViolation

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class SparsePoly:
    """不可变的稀疏多项式：variables 为有序变量名，terms 不存零系数"""

    variables: tuple[str, ...]
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: dict[Exponent, int] = {}
        n = len(self.variables)
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ContractViolation(f"指数向量 {exp} 与变量 {self.variables} 不匹配")
            if isinstance(coeff, bool) or not isinstance(coeff, int):
                raise ContractViolation(f"系数必须为整数: {coeff!r}")
            if coeff != 0:
                cleaned[exp] = cleaned.get(exp, 0) + coeff
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    @classmethod
    def constant(cls, variables: Sequence[str], value: int) -> "SparsePoly":
        return cls(tuple(variables), {(0,) * len(variables): value})

    @classmethod
    def linear(cls, variables: Sequence[str], const: int, coeffs: Mapping[str, int]) -> "SparsePoly":
        """
        构造线性式 const + Σ c_x·x

        Args:
            variables: 变量名列表
            const: 常数项
            coeffs: 变量名到系数的映射
        """
        variables = tuple(variables)
        terms = {(0,) * len(variables): const}
        for name, c in coeffs.items():
            if name not in variables:
                raise ContractViolation(f"未知变量 {name!r}，可用变量: {variables}")
            exp = [0] * len(variables)
            exp[variables.index(name)] = 1
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + c
        return cls(variables, terms)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        _require_same_variables(self, other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return SparsePoly(self.variables, out)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        return poly_mul(self, other)

    def __pow__(self, e: int) -> "SparsePoly":
        return poly_pow(self, e)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.variables == other.variables and dict(self.terms) == dict(other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exp) if e
            )
            c = self.terms[exp]
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def _require_same_variables(a: SparsePoly, b: SparsePoly) -> None:
    if a.variables != b.variables:
        raise ContractViolation(f"变量列表不一致: {a.variables} vs {b.variables}")


def poly_mul(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    """两个多项式相乘，结果中不含零系数"""
    _require_same_variables(a, b)
    out: dict[Exponent, int] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            out[exp] = out.get(exp, 0) + ca * cb
    return SparsePoly(a.variables, out)


def poly_pow(a: SparsePoly, e: int) -> SparsePoly:
    """快速幂 a^e，a^0 = 1"""
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise ContractViolation(f"指数必须为非负整数: {e!r}")
    result = SparsePoly.constant(a.variables, 1)
    base = a
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def coefficient(p: SparsePoly, exponent: Sequence[int]) -> int:
    """取出指定单项式的系数，缺省为 0"""
    exponent = tuple(exponent)
    if len(exponent) != len(p.variables):
        raise ContractViolation(
            f"指数向量长度 {len(exponent)} 与变量个数 {len(p.variables)} 不一致"
        )
    return p.terms.get(exponent, 0)
