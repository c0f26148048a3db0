"""
子集轨道枚举
以排序元组作为规范代表，在生成元闭包下做广度优先搜索
"""
from collections import deque
from typing import Iterable, Sequence

from kernel.errors import ContractViolation

from .permutations import Perm


def set_orbits(subsets: Iterable[Sequence[int]], generators: Sequence[Perm]) -> list[list[tuple[int, ...]]]:
    """
    计算生成元在一族子集上的轨道

    Args:
        subsets: 子集族（必须在群作用下封闭）
        generators: 生成元

    Returns:
        轨道列表，每个轨道内按字典序排列，轨道按最小代表排序
    """
    universe = {tuple(sorted(s)) for s in subsets}
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for rep in sorted(universe):
        if rep in seen:
            continue
        orbit = {rep}
        queue = deque([rep])
        while queue:
            s = queue.popleft()
            for g in generators:
                image = tuple(sorted(g.apply_tuple(s)))
                if image not in universe:
                    raise ContractViolation(f"子集族在群作用下不封闭: {s} → {image}")
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def count_set_orbits(subsets: Iterable[Sequence[int]], generators: Sequence[Perm]) -> int:
    return len(set_orbits(subsets, generators))
