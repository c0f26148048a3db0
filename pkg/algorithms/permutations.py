"""
置换与置换群
Perm 采用从左到右的复合约定：(p * q)(i) = q(p(i))，即先作用 p 再作用 q
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Optional, Sequence

from config.defaults import GROUP_DEFAULTS
from kernel.errors import ContractViolation, SearchBudgetExceeded


@dataclass(frozen=True)
class Perm:
    """{0, ..., n-1} 上的置换"""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ContractViolation(f"不是双射: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Perm":
        # 内部复合结果必为双射，跳过校验
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise ContractViolation(f"置换次数不一致: {self.degree} vs {other.degree}")
        return Perm._trusted(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def first_moved(self) -> Optional[int]:
        return next((i for i, j in enumerate(self.images) if i != j), None)

    def apply_set(self, points: Iterable[int]) -> frozenset:
        return frozenset(self.images[i] for i in points)

    def apply_tuple(self, points: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.images[i] for i in points)


def orbit_of(point: int, generators: Sequence[Perm]) -> list[int]:
    """点在生成元作用下的轨道（按发现顺序）"""
    seen = {point}
    order = [point]
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = g(x)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


class StabilizerChain:
    """
    确定性 Schreier-Sims 稳定子链

    第 i 层的强生成元为固定 base[0..i-1] 的全部强生成元。
    """

    def __init__(self, degree: int, generators: Sequence[Perm]):
        self.degree = degree
        self.base: list[int] = []
        self.strong: list[Perm] = []
        self._transversals: dict[int, dict[int, Perm]] = {}
        for g in generators:
            if g.degree != degree:
                raise ContractViolation(f"生成元次数 {g.degree} 与群的次数 {degree} 不一致")
            if g.is_identity():
                continue
            self.strong.append(g)
            if all(g(b) == b for b in self.base):
                self.base.append(g.first_moved())
        self._run()

    def _level_generators(self, i: int) -> list[Perm]:
        prefix = self.base[:i]
        return [s for s in self.strong if all(s(b) == b for b in prefix)]

    def transversal(self, i: int) -> dict[int, Perm]:
        """第 i 层的陪集代表：u(base[i]) = 键"""
        if i not in self._transversals:
            gens = self._level_generators(i)
            bp = self.base[i]
            trans = {bp: Perm.identity(self.degree)}
            queue = deque([bp])
            while queue:
                x = queue.popleft()
                for s in gens:
                    y = s(x)
                    if y not in trans:
                        trans[y] = trans[x] * s
                        queue.append(y)
            self._transversals[i] = trans
        return self._transversals[i]

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """沿链筛选 g，返回 (余元, 停止的层)；层等于 len(base) 且余元为单位元表示 g 属于群"""
        for k in range(start, len(self.base)):
            trans = self.transversal(k)
            b = g(self.base[k])
            if b not in trans:
                return g, k
            g = g * trans[b].inverse()
        return g, len(self.base)

    def _add_strong(self, h: Perm, level: int) -> None:
        if level == len(self.base):
            self.base.append(h.first_moved())
        self.strong.append(h)
        self._transversals.clear()

    def _run(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            trans = self.transversal(i)
            for a in sorted(trans):
                u = trans[a]
                for s in self._level_generators(i):
                    c = s(a)
                    schreier = u * s * trans[c].inverse()
                    h, j = self.sift(schreier, i + 1)
                    if j < len(self.base) or not h.is_identity():
                        self._add_strong(h, j)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self) -> int:
        return prod(len(self.transversal(i)) for i in range(len(self.base)))

    def contains(self, g: Perm) -> bool:
        h, j = self.sift(g)
        return j == len(self.base) and h.is_identity()


class PermGroup:
    """由生成元给出的置换群；阶不超过 closure_limit 时缓存全部元素"""

    def __init__(
        self,
        degree: int,
        generators: Sequence[Perm],
        closure_limit: int = GROUP_DEFAULTS["closure_limit"]
    ):
        """
        初始化置换群

        Args:
            degree: 作用集合的大小
            generators: 生成元列表（可为空，表示平凡群）
            closure_limit: 显式枚举元素的阶上限
        """
        self.degree = degree
        self.generators = [g for g in generators]
        for g in self.generators:
            if g.degree != degree:
                raise ContractViolation(f"生成元次数 {g.degree} 与群的次数 {degree} 不一致")
        self.closure_limit = closure_limit
        self._chain: Optional[StabilizerChain] = None
        self._elements: Optional[frozenset[Perm]] = None

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Perm]) -> "PermGroup":
        """由已知闭合的元素集合构造群"""
        elements = frozenset(elements) | {Perm.identity(degree)}
        group = cls(degree, sorted(elements, key=lambda p: p.images))
        group._elements = elements
        return group

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        if self._elements is not None:
            return len(self._elements)
        return self.chain.order()

    def elements(self) -> frozenset[Perm]:
        """
        显式元素集合（生成元的乘法闭包）

        Raises:
            SearchBudgetExceeded: 群的阶超过 closure_limit
        """
        if self._elements is None:
            if self.order() > self.closure_limit:
                raise SearchBudgetExceeded(
                    f"群的阶 {self.order()} 超过显式枚举上限 {self.closure_limit}，请使用稳定子链"
                )
            identity = Perm.identity(self.degree)
            seen = {identity}
            queue = deque([identity])
            while queue:
                e = queue.popleft()
                for g in self.generators:
                    x = e * g
                    if x not in seen:
                        seen.add(x)
                        queue.append(x)
            self._elements = frozenset(seen)
        return self._elements

    def contains(self, g: Perm) -> bool:
        if self._elements is not None:
            return g in self._elements
        return self.chain.contains(g)

    def orbit(self, point: int) -> list[int]:
        return orbit_of(point, self.generators)

    def orbits(self) -> list[list[int]]:
        remaining = set(range(self.degree))
        result = []
        for p in range(self.degree):
            if p in remaining:
                orb = sorted(self.orbit(p))
                remaining -= set(orb)
                result.append(orb)
        return result

    def is_k_transitive(self, k: int) -> bool:
        """在有序 k 元组上的轨道是否为全部 n!/(n-k)! 个元组"""
        if k < 1 or k > self.degree:
            raise ContractViolation(f"k 必须在 1..{self.degree} 之内: {k}")
        start = tuple(range(k))
        seen = {start}
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for g in self.generators:
                u = g.apply_tuple(t)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == factorial(self.degree) // factorial(self.degree - k)
