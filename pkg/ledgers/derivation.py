"""
推导表达式树
三角形账本中每个 P-次数都由公式模块的运算与带注释的常数组合而成
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Callable, Union


@dataclass(frozen=True)
class Const:
    """带来源注释的整数常数"""

    value: int
    note: str

    def evaluate(self) -> int:
        return self.value

    def describe(self) -> str:
        return f"{self.value} [{self.note}]"


@dataclass(frozen=True)
class Call:
    """对公式函数的一次调用，参数可以是整数、普通对象或子表达式"""

    func: Callable
    args: tuple = ()

    def evaluate(self) -> int:
        return self.func(*(a.evaluate() if isinstance(a, Expr) else a for a in self.args))

    def describe(self) -> str:
        parts = [a.describe() if isinstance(a, Expr) else _short(a) for a in self.args]
        return f"{self.func.__name__}({', '.join(parts)})"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def evaluate(self) -> int:
        return prod(f.evaluate() for f in self.factors)

    def describe(self) -> str:
        return " * ".join(f.describe() for f in self.factors)


Expr = (Const, Call, Product)
Derivation = Union[Const, Call, Product]


def _short(value) -> str:
    if hasattr(value, "model_dump"):
        fields = ", ".join(f"{k}={v}" for k, v in value.model_dump().items())
        return f"{type(value).__name__}({fields})"
    return repr(value)
