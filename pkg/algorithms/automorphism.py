"""
关联结构的自同构搜索
按稳定子链逐层回溯；候选像由点对公共块数与三点共块关系细化，叶子处再核对块的像
"""
from dataclasses import dataclass, field
from itertools import combinations
from math import prod
from typing import Optional

import numpy as np

from config.defaults import GROUP_DEFAULTS
from kernel.errors import ContractViolation, SearchBudgetExceeded
from utils import console

from .permutations import Perm, orbit_of


@dataclass
class AutomorphismSearchResult:
    """搜索结果：点置换生成元、基、各层轨道长度与访问的节点数"""

    generators: list[Perm]
    base: list[int]
    orbit_sizes: list[int]
    nodes_visited: int = field(default=0)

    @property
    def order(self) -> int:
        return prod(self.orbit_sizes)


class IncidenceAutomorphismSearch:
    """点 × 块关联矩阵的自同构回溯搜索"""

    def __init__(self, matrix: np.ndarray, budget: int = GROUP_DEFAULTS["search_budget"]):
        """
        初始化搜索

        Args:
            matrix: 布尔关联矩阵，行为点、列为块
            budget: 回溯节点预算
        """
        m = np.asarray(matrix, dtype=bool)
        self.n = m.shape[0]
        blocks = [frozenset(int(i) for i in np.flatnonzero(m[:, j])) for j in range(m.shape[1])]
        self.block_index = {blk: j for j, blk in enumerate(blocks)}
        if len(self.block_index) != len(blocks):
            raise ContractViolation("关联结构含有重复的块")
        self.blocks = blocks
        mi = m.astype(int)
        self.pair = (mi @ mi.T).tolist()
        self.on = (np.einsum("at,bt,ct->abc", mi, mi, mi) > 0).tolist()
        self.budget = budget
        self.visited = 0

    def _compatible(self, items: list[tuple[int, int]], x: int, y: int) -> bool:
        pair, on = self.pair, self.on
        if pair[x][x] != pair[y][y]:
            return False
        for a, fa in items:
            if pair[a][x] != pair[fa][y]:
                return False
        for (a, fa), (b, fb) in combinations(items, 2):
            if on[a][b][x] != on[fa][fb][y]:
                return False
        return True

    def block_image(self, images: tuple[int, ...]) -> Optional[Perm]:
        """点置换诱导的块置换；不保持块结构时返回 None"""
        out = []
        for blk in self.blocks:
            j = self.block_index.get(frozenset(images[i] for i in blk))
            if j is None:
                return None
            out.append(j)
        return Perm(tuple(out))

    def extend(self, partial: dict[int, int]) -> Optional[tuple[Perm, Perm]]:
        """把部分映射扩张为一个自同构，找不到时返回 None"""
        mapping = dict(partial)
        if len(set(mapping.values())) != len(mapping):
            return None
        return self._search(mapping, set(mapping.values()))

    def _search(self, mapping: dict[int, int], used: set[int]):
        self.visited += 1
        if self.visited > self.budget:
            raise SearchBudgetExceeded(f"自同构搜索超过节点预算 {self.budget}")
        if len(mapping) == self.n:
            images = tuple(mapping[i] for i in range(self.n))
            blocks = self.block_image(images)
            return (Perm(images), blocks) if blocks is not None else None

        items = sorted(mapping.items())
        best = None
        for x in range(self.n):
            if x in mapping:
                continue
            candidates = [y for y in range(self.n) if y not in used and self._compatible(items, x, y)]
            if not candidates:
                return None
            if best is None or len(candidates) < len(best[1]):
                best = (x, candidates)
            if len(candidates) == 1:
                break

        x, candidates = best
        for y in candidates:
            mapping[x] = y
            used.add(y)
            found = self._search(mapping, used)
            del mapping[x]
            used.discard(y)
            if found is not None:
                return found
        return None

    def run(self) -> AutomorphismSearchResult:
        """逐层计算点稳定子的轨道，收集找到的全部自同构作为生成元"""
        console.banner(f"🔁 自同构搜索（{self.n} 个点，{len(self.blocks)} 个块）")
        generators: list[Perm] = []
        base = list(range(self.n))
        orbit_sizes = []
        for level, b in enumerate(base):
            fixed = {i: i for i in range(level)}
            level_gens = [g for g in generators if all(g(i) == i for i in range(level))]
            orbit = set(orbit_of(b, level_gens))
            for c in range(level, self.n):
                if c in orbit:
                    continue
                found = self.extend({**fixed, b: c})
                if found is None:
                    continue
                perm, _ = found
                generators.append(perm)
                level_gens.append(perm)
                orbit = set(orbit_of(b, level_gens))
            orbit_sizes.append(len(orbit))
            console.info(f"第 {level} 层: 轨道长度 {len(orbit)}，已访问 {self.visited} 个节点")
        result = AutomorphismSearchResult(generators, base, orbit_sizes, self.visited)
        console.done(f"自同构群的阶 {result.order}，生成元 {len(generators)} 个，共访问 {result.nodes_visited} 个节点")
        return result
