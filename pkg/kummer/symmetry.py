"""
16_6 构型的对称性
自同构群、传递性、trope 稳定子的作用以及 grid 模型上三元组的轨道
"""
from itertools import permutations

from algorithms.automorphism import AutomorphismSearchResult, IncidenceAutomorphismSearch
from algorithms.orbits import count_set_orbits
from algorithms.permutations import Perm, PermGroup
from config.defaults import GROUP_DEFAULTS
from kernel.errors import ContractViolation, InternalConsistencyError

from .incidence import (
    Incidence16_6,
    build_grid_model,
    build_theta_model,
    grid_index,
    offtrope_triples,
    ontrope_triples
)


def automorphism_search(inc: Incidence16_6, budget: int = GROUP_DEFAULTS["search_budget"]) -> AutomorphismSearchResult:
    return IncidenceAutomorphismSearch(inc.matrix, budget=budget).run()


def automorphism_group(inc: Incidence16_6, budget: int = GROUP_DEFAULTS["search_budget"]) -> PermGroup:
    """
    节点上保持关联的置换（可延拓到 trope）构成的群

    Raises:
        SearchBudgetExceeded: 回溯超出预算
        InternalConsistencyError: 稳定子链的阶与搜索得到的轨道长度乘积不一致
    """
    result = automorphism_search(inc, budget)
    group = PermGroup(len(inc.nodes), result.generators)
    if group.order() != result.order:
        raise InternalConsistencyError(
            f"{inc.name}: Schreier-Sims 阶 {group.order()} ≠ 轨道长度乘积 {result.order}"
        )
    return group


def trope_action(inc: Incidence16_6, group: PermGroup) -> PermGroup:
    """同一个群在 trope 上的作用"""
    search = IncidenceAutomorphismSearch(inc.matrix)
    generators = []
    for g in group.generators:
        image = search.block_image(g.images)
        if image is None:
            raise ContractViolation(f"{inc.name}: 生成元 {g.images} 不保持关联")
        generators.append(image)
    return PermGroup(len(inc.tropes), generators)


def check_transitivity(G: PermGroup, k: int) -> bool:
    """G 是否在其作用集合上 k 重传递"""
    return G.is_k_transitive(k)


def trope_stabilizer_actions(inc: Incidence16_6, G: PermGroup, trope) -> tuple[PermGroup, bool]:
    """
    trope 节点集的集合稳定子

    Args:
        inc: 16_6 构型
        G: 节点上的自同构群（需可显式枚举）
        trope: trope 下标或标签

    Returns:
        (在 6 个关联节点上的像群, 是否在其余 10 个节点上传递)
    """
    t = inc.trope_index(trope) if isinstance(trope, str) else int(trope)
    if not 0 <= t < len(inc.tropes):
        raise ContractViolation(f"trope 下标越界: {trope}")
    incident = inc.nodes_on(t)
    block = frozenset(incident)
    position = {node: k for k, node in enumerate(incident)}
    stabilizer = [g for g in G.elements() if g.apply_set(block) == block]

    image = PermGroup.from_elements(
        len(incident), {Perm(tuple(position[g(node)] for node in incident)) for g in stabilizer}
    )
    others = [i for i in range(len(inc.nodes)) if i not in block]
    reached = {g(others[0]) for g in stabilizer}
    return image, reached == set(others)


def theta_relabelings() -> list[Perm]:
    """{1..6} 的 720 个重排诱导的节点置换（theta 模型中 ∅ 为 0 号节点）"""
    inc = build_theta_model()
    index = {label: i for i, label in enumerate(inc.nodes)}
    perms = []
    for sigma in permutations(range(1, 7)):
        images = []
        for label in inc.nodes:
            if label == "n∅":
                images.append(index[label])
                continue
            moved = sorted(sigma[int(ch) - 1] for ch in label[1:])
            images.append(index["n" + "".join(map(str, moved))])
        perms.append(Perm(tuple(images)))
    return perms


def grid_symmetry_generators(include_swap: bool) -> list[Perm]:
    """行置换 S4、列置换 S4，以及可选的行列互换"""
    def node_perm(fn) -> Perm:
        images = [0] * 16
        for a in range(1, 5):
            for b in range(1, 5):
                images[grid_index(a, b)] = grid_index(*fn(a, b))
        return Perm(tuple(images))

    transposition = {1: 2, 2: 1, 3: 3, 4: 4}
    cycle = {1: 2, 2: 3, 3: 4, 4: 1}
    generators = [
        node_perm(lambda a, b: (transposition[a], b)),
        node_perm(lambda a, b: (cycle[a], b)),
        node_perm(lambda a, b: (a, transposition[b])),
        node_perm(lambda a, b: (a, cycle[b])),
    ]
    if include_swap:
        generators.append(node_perm(lambda a, b: (b, a)))
    return generators


def grid_offtrope_orbit_count(include_swap: bool) -> int:
    """grid 模型中离面三元组在 S4×S4（可加互换）下的轨道数"""
    return count_set_orbits(offtrope_triples(build_grid_model()), grid_symmetry_generators(include_swap))


def grid_ontrope_orbit_count(include_swap: bool) -> int:
    return count_set_orbits(ontrope_triples(build_grid_model()), grid_symmetry_generators(include_swap))


def ontrope_triple_orbit_count(inc: Incidence16_6, G: PermGroup) -> int:
    return count_set_orbits(ontrope_triples(inc), G.generators)


def offtrope_triple_orbit_count(inc: Incidence16_6, G: PermGroup) -> int:
    return count_set_orbits(offtrope_triples(inc), G.generators)
