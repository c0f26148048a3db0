"""
数据模型定义模块
包含所有 Pydantic 数据模型：公式输入、分量账本、一般性报告与命令报告
"""
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SeveriDegreeInput(BaseModel):
    """Severi 次数公式的输入"""
    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=2, description="曲面次数")
    delta: Literal[1, 2, 3] = Field(description="节点个数")


class PluckerInput(BaseModel):
    """只含结点与尖点的平面曲线"""
    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=1, description="平面曲线次数")
    delta: int = Field(ge=0, description="结点个数")
    kappa: int = Field(ge=0, description="尖点个数")

    @property
    def geometric_genus(self) -> int:
        return (self.d - 1) * (self.d - 2) // 2 - self.delta - self.kappa

    @model_validator(mode="after")
    def _check_genus(self):
        if self.geometric_genus < 0:
            raise ValueError(
                f"几何亏格为负: d={self.d}, δ={self.delta}, κ={self.kappa}"
            )
        return self


class PencilBudget(BaseModel):
    """曲面束的拓扑 Euler 示性数预算"""
    model_config = ConfigDict(frozen=True)

    chi_surface: int = Field(description="曲面 S 的 Euler 示性数")
    chi_generic_fibre: int = Field(description="一般纤维的 Euler 示性数")
    chi_base: int = Field(description="底曲线的 Euler 示性数")
    special_fibres: list[int] = Field(default=[], description="非结点型特殊纤维的 Euler 示性数")


class LedgerEntry(BaseModel):
    """账本中的一项：数量 × 重数"""
    model_config = ConfigDict(frozen=True)

    label: str = Field(description="分量名称")
    count: int = Field(description="数量（或分量的次数）")
    multiplicity: int = Field(description="重数")
    provenance: str = Field(description="数值来源说明")

    @property
    def contribution(self) -> int:
        return self.count * self.multiplicity


class ComponentLedger(BaseModel):
    """分量账本：加权总和必须等于目标次数"""
    model_config = ConfigDict(frozen=True)

    target_name: str = Field(description="目标簇名称")
    target_degree: int = Field(description="目标次数")
    entries: list[LedgerEntry] = Field(description="正贡献项")
    null_components: list[LedgerEntry] = Field(
        default=[], description="P-次数为 0 的分量，单独报告，不计入总和"
    )

    @property
    def total(self) -> int:
        return sum(e.contribution for e in self.entries)

    @model_validator(mode="after")
    def _check_entries(self):
        for e in self.entries:
            if e.count <= 0 or e.multiplicity <= 0:
                raise ValueError(f"账本项 {e.label} 的数量与重数必须为正: ({e.count}, {e.multiplicity})")
        for e in self.null_components:
            if e.count != 0 or e.multiplicity <= 0:
                raise ValueError(f"零贡献分量 {e.label} 必须数量为 0 且重数为正")
        if self.total != self.target_degree:
            raise ValueError(
                f"账本 {self.target_name} 加权总和 {self.total} ≠ 目标次数 {self.target_degree}"
            )
        return self

    def to_json_dict(self) -> dict:
        """按固定键序导出；没有零贡献分量时省略该字段"""
        data = {
            "target_name": self.target_name,
            "target_degree": self.target_degree,
            "entries": [e.model_dump() for e in self.entries],
        }
        if self.null_components:
            data["null_components"] = [e.model_dump() for e in self.null_components]
        return data


class GenericityReport(BaseModel):
    """一般性检验报告"""
    passed: bool = Field(description="是否通过")
    violations: list[str] = Field(default=[], description="违反项描述")
    checked: dict[str, int] = Field(default={}, description="各项检查扫描的对象个数")

    @model_validator(mode="after")
    def _status(self):
        if self.passed != (not self.violations):
            raise ValueError("passed 必须与 violations 是否为空一致")
        return self


class Report(BaseModel):
    """命令行输出报告"""
    command: str = Field(description="执行的命令")
    status: Literal["pass", "fail"] = Field(description="pass 当且仅当没有违反项")
    tables: list[ComponentLedger] = Field(default=[], description="分量账本")
    data: dict[str, Any] = Field(default={}, description="其他数值结果")
    violations: list[str] = Field(default=[], description="违反项")
    seed: Optional[int] = Field(default=None, description="四面体构型使用的种子")
    timing_ms: int = Field(default=0, description="耗时（毫秒），仅在 --timing 时填写")

    @model_validator(mode="after")
    def _status(self):
        expected = "pass" if not self.violations else "fail"
        if self.status != expected:
            raise ValueError(f"status={self.status} 与违反项个数 {len(self.violations)} 不一致")
        return self
