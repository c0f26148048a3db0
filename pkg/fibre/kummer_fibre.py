"""
Kummer 退化的中心纤维
33 个分量：K3 分量 S0、每个节点一个爆破二次曲面 Q、每个 trope 一个 F_4 曲面 W；
二重曲线按 16_6 关联连接
"""
from config.dataset_loader import load_dataset
from kummer.incidence import Incidence16_6, build_theta_model

from .graph import CurveSide, DoubleCurve, FibreComponent, FibreGraph, TriplePoint
from .presentation import BlowUp, SurfacePresentation

K3_COMPONENT = "S0"


def _node_component(label: str) -> str:
    return f"Q_{label}"


def _trope_component(label: str) -> str:
    return f"W_{label}"


def _k3_presentation(inc: Incidence16_6) -> SurfacePresentation:
    """
    S0 上的 32 条 (−2)-曲线：节点上的例外曲线 E 与 trope 的严格变换 D

    S0 不是有理曲面，这里只记录这些曲线的相交矩阵。
    """
    basis = [f"E_{n}" for n in inc.nodes] + [f"D_{t}" for t in inc.tropes]
    k = len(inc.nodes)
    gram = [[0] * len(basis) for _ in basis]
    for i in range(len(basis)):
        gram[i][i] = -2
    for s in range(k):
        for j in inc.tropes_through(s):
            gram[s][k + j] = gram[k + j][s] = 1
    return SurfacePresentation(base="explicit", basis=basis, gram=gram)


def _quadric_presentation(inc: Incidence16_6, s: int) -> SurfacePresentation:
    """二次曲面在二次曲线 E ∈ |(1,1)| 上的 6 个点爆破，每个点对应经过该节点的一个 trope"""
    return SurfacePresentation(
        base="smooth-quadric",
        curves={"E": [1, 1]},
        blowups=[BlowUp(name=f"G_{inc.tropes[j]}", through=[("E", 1)]) for j in inc.tropes_through(s)],
    )


def _hirzebruch_presentation() -> SurfacePresentation:
    return SurfacePresentation(base="hirzebruch", n=4, curves={"D": [0, 1], "F": [1, 0]})


def build_kummer_fibre(inc: Incidence16_6 = None) -> FibreGraph:
    """
    构造 Kummer 退化的好模型中心纤维

    Returns:
        FibreGraph: 33 个分量、16 + 16 + 96 = 128 条二重曲线
    """
    inc = inc if inc is not None else build_theta_model()
    components = [FibreComponent(name=K3_COMPONENT, presentation=_k3_presentation(inc))]
    components += [
        FibreComponent(name=_node_component(n), presentation=_quadric_presentation(inc, s))
        for s, n in enumerate(inc.nodes)
    ]
    components += [
        FibreComponent(name=_trope_component(t), presentation=_hirzebruch_presentation())
        for t in inc.tropes
    ]

    curves = []
    for s, n in enumerate(inc.nodes):
        curves.append(DoubleCurve(
            name=f"E_{n}",
            side_a=CurveSide(component=K3_COMPONENT, curve=f"E_{n}"),
            side_b=CurveSide(component=_node_component(n), curve="E"),
            triple_points=[TriplePoint(component=_trope_component(inc.tropes[j])) for j in inc.tropes_through(s)],
        ))
    for j, t in enumerate(inc.tropes):
        curves.append(DoubleCurve(
            name=f"D_{t}",
            side_a=CurveSide(component=K3_COMPONENT, curve=f"D_{t}"),
            side_b=CurveSide(component=_trope_component(t), curve="D"),
            triple_points=[TriplePoint(component=_node_component(inc.nodes[s])) for s in inc.nodes_on(j)],
        ))
    for s, n in enumerate(inc.nodes):
        for j in inc.tropes_through(s):
            t = inc.tropes[j]
            curves.append(DoubleCurve(
                name=f"G_{t}_{n}",
                side_a=CurveSide(component=_node_component(n), curve=f"G_{t}"),
                side_b=CurveSide(component=_trope_component(t), curve="F"),
                triple_points=[TriplePoint(component=K3_COMPONENT)],
            ))

    return FibreGraph(
        components=components,
        double_curves=curves,
        metadata=[
            f"Kummer good-model central fibre, 16_6 incidence from the {inc.name} model",
            "S0 self-intersections: every smooth rational curve on a K3 surface has square -2",
        ],
    )


def build_synthetic_weighted_fibre() -> FibreGraph:
    """两个分量、重数 (1, 2) 的非既约纤维：2·(−1) + 1·2 = 0"""
    return load_dataset("weighted_pair", FibreGraph)
