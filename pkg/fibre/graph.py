"""
半稳定中心纤维的对偶复形
分量、二重曲线与三重点的数据模型，以及三重点公式（含重数加权形式）的检查
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.dataset_loader import load_model_file
from kernel.errors import ContractViolation
from utils import console

from .presentation import SurfacePresentation, self_intersection


class FibreComponent(BaseModel):
    """中心纤维的一个不可约分量"""

    name: str = Field(description="分量名称")
    multiplicity: int = Field(default=1, ge=1, description="分量在纤维中的重数")
    presentation: SurfacePresentation = Field(description="相交格表示")


class CurveSide(BaseModel):
    """二重曲线在某个分量上的一侧：按曲线名或类向量给出"""
    model_config = ConfigDict(populate_by_name=True)

    component: str = Field(description="所在分量")
    curve: Optional[str] = Field(default=None, description="分量表示中的曲线名")
    class_vector: Optional[list[int]] = Field(default=None, alias="class", description="类向量")

    @model_validator(mode="after")
    def _one_of(self):
        if (self.curve is None) == (self.class_vector is None):
            raise ValueError(f"{self.component}: curve 与 class 必须恰好给出一个")
        return self


class TriplePoint(BaseModel):
    """二重曲线上的三重点：第三个分量及其重数"""

    component: str = Field(description="第三个分量")
    multiplicity: int = Field(default=1, ge=1, description="第三个分量的重数")


class DoubleCurve(BaseModel):
    """两个分量的交线 R = Q ∩ Q′"""

    name: str = Field(description="曲线名称")
    side_a: CurveSide = Field(description="R 在 Q 上")
    side_b: CurveSide = Field(description="R 在 Q′ 上")
    triple_points: list[TriplePoint] = Field(default=[], description="R 上的三重点")


class FibreGraph(BaseModel):
    """中心纤维的带标号对偶复形"""

    components: list[FibreComponent] = Field(description="分量列表")
    double_curves: list[DoubleCurve] = Field(description="二重曲线列表")
    metadata: list[str] = Field(default=[], description="来源说明")

    @model_validator(mode="after")
    def _check_references(self):
        by_name = {}
        for c in self.components:
            if c.name in by_name:
                raise ValueError(f"分量名称重复: {c.name}")
            by_name[c.name] = c

        seen_curves = set()
        for r in self.double_curves:
            if r.name in seen_curves:
                raise ValueError(f"二重曲线名称重复: {r.name}")
            seen_curves.add(r.name)
            if r.side_a.component == r.side_b.component:
                raise ValueError(f"{r.name}: 两侧必须是不同的分量")
            for side in (r.side_a, r.side_b):
                comp = by_name.get(side.component)
                if comp is None:
                    raise ValueError(f"{r.name}: 未知分量 {side.component}")
                p = comp.presentation
                if side.curve is not None:
                    if side.curve not in p.curves and side.curve not in p.basis_names():
                        raise ValueError(f"{r.name}: 分量 {side.component} 上没有曲线 {side.curve}")
                elif len(side.class_vector) != len(p.basis_names()):
                    raise ValueError(
                        f"{r.name}: {side.component} 上的类向量长度 {len(side.class_vector)} "
                        f"≠ 基的个数 {len(p.basis_names())}"
                    )
            for t in r.triple_points:
                third = by_name.get(t.component)
                if third is None:
                    raise ValueError(f"{r.name}: 三重点引用了未知分量 {t.component}")
                if t.component in (r.side_a.component, r.side_b.component):
                    raise ValueError(f"{r.name}: 三重点的第三分量不能是曲线两侧的分量")
                if t.multiplicity != third.multiplicity:
                    raise ValueError(f"{r.name}: 三重点处 {t.component} 的重数与分量重数不一致")
        return self

    def component(self, name: str) -> FibreComponent:
        for c in self.components:
            if c.name == name:
                return c
        raise ContractViolation(f"未知分量: {name}")

    def side_degree(self, side: CurveSide) -> int:
        """二重曲线在该侧分量中的法丛次数，即自交数"""
        p = self.component(side.component).presentation
        vec = p.curve_class(side.curve) if side.curve is not None else side.class_vector
        return self_intersection(p, vec)


class CurveCheck(BaseModel):
    """单条二重曲线的检查结果"""

    curve: str
    lhs: int = Field(description="m′·deg N_{R|Q} + m·deg N_{R|Q′} + Σ 三重点重数")
    passed: bool


class TriplePointReport(BaseModel):
    """三重点公式检查报告"""

    checks: list[CurveCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violations(self) -> list[str]:
        return [f"{c.curve}: lhs = {c.lhs}" for c in self.checks if not c.passed]


def check_triple_point_formula(g: FibreGraph) -> TriplePointReport:
    """
    对每条二重曲线检查（加权）三重点公式

    所有分量重数为 1 时即 deg N_{R|Q} + deg N_{R|Q′} + #三重点 = 0。
    失败不抛异常，记录在报告中。
    """
    console.banner(f"🧮 三重点公式检查（{len(g.double_curves)} 条二重曲线）")
    checks = []
    for r in g.double_curves:
        m = g.component(r.side_a.component).multiplicity
        m_prime = g.component(r.side_b.component).multiplicity
        lhs = (
            m_prime * g.side_degree(r.side_a)
            + m * g.side_degree(r.side_b)
            + sum(t.multiplicity for t in r.triple_points)
        )
        checks.append(CurveCheck(curve=r.name, lhs=lhs, passed=lhs == 0))
        if lhs != 0:
            console.warn(f"{r.name}: lhs = {lhs}")
    report = TriplePointReport(checks=checks)
    console.done(f"通过 {sum(c.passed for c in checks)}/{len(checks)}")
    return report


def fibre_to_json(g: FibreGraph) -> dict:
    """按文档化的 JSON 格式导出（曲线侧的类向量键名为 class）"""
    return g.model_dump(mode="json", by_alias=True, exclude_none=True)


def load_fibre(path) -> FibreGraph:
    """
    读取 FibreGraph JSON 文件

    Raises:
        FileNotFoundError: 文件不存在
        ValueError: 格式不合法
    """
    return load_model_file(path, FibreGraph)


def mutate_drop_triple_point(g: FibreGraph, curve: str, index: int = 0) -> FibreGraph:
    """返回删去指定二重曲线上第 index 个三重点后的副本"""
    curves = []
    found = False
    for r in g.double_curves:
        if r.name == curve:
            if not 0 <= index < len(r.triple_points):
                raise ContractViolation(f"{curve} 上没有第 {index} 个三重点")
            points = r.triple_points[:index] + r.triple_points[index + 1:]
            r = r.model_copy(update={"triple_points": points})
            found = True
        curves.append(r)
    if not found:
        raise ContractViolation(f"未知二重曲线: {curve}")
    return g.model_copy(update={"double_curves": curves})
