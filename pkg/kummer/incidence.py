"""
16_6 构型
两个组合模型：theta 模型（{1..6} 的子集）与 grid 模型（4×4 网格），以及不变量校验
"""
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from config.defaults import KUMMER_CONSTANTS
from kernel.errors import ContractViolation


@dataclass(frozen=True, eq=False)
class Incidence16_6:
    """节点 × 三切面（trope）的布尔关联矩阵"""

    name: str
    nodes: tuple[str, ...]
    tropes: tuple[str, ...]
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=bool)
        if m.shape != (len(self.nodes), len(self.tropes)):
            raise ContractViolation(
                f"关联矩阵形状 {m.shape} 与节点数 {len(self.nodes)}、trope 数 {len(self.tropes)} 不符"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def nodes_on(self, trope: int) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.matrix[:, trope]))

    def tropes_through(self, node: int) -> tuple[int, ...]:
        return tuple(int(j) for j in np.flatnonzero(self.matrix[node]))

    def trope_index(self, label: str) -> int:
        try:
            return self.tropes.index(label)
        except ValueError:
            raise ContractViolation(f"未知 trope: {label}，可用: {', '.join(self.tropes)}")

    def common_tropes(self, nodes) -> tuple[int, ...]:
        mask = np.logical_and.reduce([self.matrix[n] for n in nodes])
        return tuple(int(j) for j in np.flatnonzero(mask))


def _subset_label(subset) -> str:
    return "n" + ("".join(str(i) for i in sorted(subset)) if subset else "∅")


def build_theta_model() -> Incidence16_6:
    """
    theta 模型

    节点为 ∅ 与 {1..6} 的 2 元子集；trope 为 6 个单点集与 10 个模补集的 3 元子集。
    单点 {i} 含 ∅ 与所有 {i,j}；类 {A | A^c} 含落在 A 或 A^c 内的 2 元子集。
    """
    ground = range(1, 7)
    nodes = [frozenset()] + [frozenset(p) for p in combinations(ground, 2)]
    singles = [frozenset([i]) for i in ground]
    halves = [frozenset((1,) + rest) for rest in combinations(range(2, 7), 2)]

    matrix = np.zeros((len(nodes), len(singles) + len(halves)), dtype=bool)
    for a, node in enumerate(nodes):
        for b, single in enumerate(singles):
            matrix[a, b] = not node or single <= node
        for b, half in enumerate(halves):
            complement = frozenset(ground) - half
            matrix[a, len(singles) + b] = bool(node) and (node <= half or node <= complement)

    trope_labels = [f"t{min(s)}" for s in singles] + [
        "t" + "".join(map(str, sorted(h))) + "|" + "".join(map(str, sorted(frozenset(ground) - h)))
        for h in halves
    ]
    return Incidence16_6("theta", tuple(_subset_label(n) for n in nodes), tuple(trope_labels), matrix)


def grid_index(a: int, b: int) -> int:
    """网格节点 (a, b)（1 起始）的下标"""
    return 4 * (a - 1) + (b - 1)


def build_grid_model() -> Incidence16_6:
    """grid 模型：trope (x, y) 含节点 (a, b) 当且仅当同行异列或同列异行"""
    cells = [(a, b) for a in range(1, 5) for b in range(1, 5)]
    matrix = np.zeros((16, 16), dtype=bool)
    for i, (a, b) in enumerate(cells):
        for j, (x, y) in enumerate(cells):
            matrix[i, j] = (a == x and b != y) or (b == y and a != x)
    return Incidence16_6(
        "grid",
        tuple(f"n{a}{b}" for a, b in cells),
        tuple(f"t{x}{y}" for x, y in cells),
        matrix,
    )


def verify_incidence(inc: Incidence16_6) -> list[str]:
    """
    穷举校验 16_6 不变量

    Returns:
        list[str]: 违反项，空列表表示通过
    """
    violations = []
    m = inc.matrix.astype(int)
    k = KUMMER_CONSTANTS["incidence"]
    pair = KUMMER_CONSTANTS["pair_tropes"]
    if m.shape != (KUMMER_CONSTANTS["nodes"], KUMMER_CONSTANTS["tropes"]):
        return [f"{inc.name}: 关联矩阵形状为 {m.shape}"]

    for i, s in enumerate(m.sum(axis=1)):
        if s != k:
            violations.append(f"{inc.name}: 节点 {inc.nodes[i]} 位于 {s} 个 trope 上")
    for j, s in enumerate(m.sum(axis=0)):
        if s != k:
            violations.append(f"{inc.name}: trope {inc.tropes[j]} 含 {s} 个节点")

    node_meet = m @ m.T
    for a, b in combinations(range(m.shape[0]), 2):
        if node_meet[a, b] != pair:
            violations.append(f"{inc.name}: 节点 {inc.nodes[a]}, {inc.nodes[b]} 共有 {node_meet[a, b]} 个 trope")
    trope_meet = m.T @ m
    for a, b in combinations(range(m.shape[1]), 2):
        if trope_meet[a, b] != pair:
            violations.append(f"{inc.name}: trope {inc.tropes[a]}, {inc.tropes[b]} 共有 {trope_meet[a, b]} 个节点")
    return violations


def triple_trope_counts(inc: Incidence16_6) -> dict[tuple[int, int, int], int]:
    """每个节点三元组所在的公共 trope 个数"""
    m = inc.matrix
    return {
        t: int(np.count_nonzero(m[t[0]] & m[t[1]] & m[t[2]]))
        for t in combinations(range(len(inc.nodes)), 3)
    }


def count_offtrope_triples(inc: Incidence16_6) -> int:
    """不落在任何 trope 上的节点三元组个数"""
    return sum(1 for n in triple_trope_counts(inc).values() if n == 0)


def ontrope_triples(inc: Incidence16_6) -> list[tuple[int, int, int]]:
    return [t for t, n in triple_trope_counts(inc).items() if n > 0]


def offtrope_triples(inc: Incidence16_6) -> list[tuple[int, int, int]]:
    return [t for t, n in triple_trope_counts(inc).items() if n == 0]


def check_triple_partition(inc: Incidence16_6) -> list[str]:
    """trope 上的三元组恰在一个 trope 上，且 16·C(6,3) + 离面三元组 = C(16,3)"""
    counts = triple_trope_counts(inc)
    violations = [
        f"{inc.name}: 三元组 {[inc.nodes[i] for i in t]} 位于 {n} 个 trope 上"
        for t, n in counts.items() if n > 1
    ]
    on = sum(1 for n in counts.values() if n == 1)
    expected_on = len(inc.tropes) * comb(KUMMER_CONSTANTS["incidence"], 3)
    if on != expected_on:
        violations.append(f"{inc.name}: trope 上三元组 {on} 个，应为 {expected_on}")
    if on + count_offtrope_triples(inc) != comb(len(inc.nodes), 3):
        violations.append(f"{inc.name}: 三元组总数不等于 C(16,3)")
    return violations


def node_pair_count(inc: Incidence16_6) -> int:
    """恰好位于两个公共 trope 上的节点对个数"""
    m = inc.matrix.astype(int)
    meet = m @ m.T
    return sum(1 for a, b in combinations(range(len(inc.nodes)), 2)
               if meet[a, b] == KUMMER_CONSTANTS["pair_tropes"])
