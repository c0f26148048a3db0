"""
曲面的相交格表示
底曲面（平面、光滑二次曲面、Hirzebruch 曲面或显式给出的格）加上一串点爆破
"""
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, PrivateAttr, model_validator

from kernel.errors import ContractViolation

BaseKind = Literal["projective-plane", "smooth-quadric", "hirzebruch", "explicit"]


class BlowUp(BaseModel):
    """一次点爆破：新增例外类 name，through 记录经过该点的曲线及其重数"""

    name: str = Field(description="例外曲线的类名")
    through: list[tuple[str, int]] = Field(default=[], description="(曲线名, 经过爆破点的重数)")


class SurfacePresentation(BaseModel):
    """
    曲面的相交格表示

    底格固定：平面 ⟨H⟩，H²=1；二次曲面 ⟨L′,L″⟩，L′²=L″²=0，L′·L″=1；
    F_n ⟨F,E⟩，F²=0，E²=−n，F·E=1。explicit 直接给出基与 Gram 矩阵。
    每次爆破追加一个 X²=−1 且与其余基元正交的类；重数为 m 经过该点的曲线 C 变为 C − mX。
    """

    base: BaseKind = Field(description="底曲面类型")
    n: Optional[int] = Field(default=None, description="Hirzebruch 曲面 F_n 的 n")
    basis: list[str] = Field(default=[], description="explicit 底的基名称")
    gram: list[list[int]] = Field(default=[], description="explicit 底的相交矩阵")
    curves: dict[str, list[int]] = Field(default={}, description="底格上命名的曲线类")
    blowups: list[BlowUp] = Field(default=[], description="按顺序进行的点爆破")

    _lattice: Optional[np.ndarray] = PrivateAttr(default=None)

    @model_validator(mode="after")
    def _check_presentation(self):
        if self.base == "hirzebruch":
            if self.n is None or self.n < 0:
                raise ValueError("hirzebruch 底需要非负整数 n")
        elif self.n is not None:
            raise ValueError(f"{self.base} 底不接受参数 n")

        if self.base == "explicit":
            size = len(self.basis)
            if size == 0 or len(self.gram) != size or any(len(row) != size for row in self.gram):
                raise ValueError(f"explicit 底的 Gram 矩阵必须为 {size}×{size}")
            g = np.array(self.gram, dtype=np.int64)
            if not np.array_equal(g, g.T):
                raise ValueError("explicit 底的 Gram 矩阵必须对称")
        elif self.basis or self.gram:
            raise ValueError(f"{self.base} 底的格是固定的，不能给出 basis/gram")

        base_names = self.base_basis()
        for name, vec in self.curves.items():
            if len(vec) != len(base_names):
                raise ValueError(f"曲线 {name} 的类向量长度 {len(vec)} ≠ 底格秩 {len(base_names)}")

        known = set(base_names) | set(self.curves)
        for b in self.blowups:
            if b.name in known:
                raise ValueError(f"爆破类名与已有名称重复: {b.name}")
            for curve, m in b.through:
                if curve not in known:
                    raise ValueError(f"爆破 {b.name} 引用了未知曲线 {curve}")
                if m < 1:
                    raise ValueError(f"爆破 {b.name} 处 {curve} 的重数必须为正: {m}")
            known.add(b.name)
        return self

    def base_basis(self) -> list[str]:
        if self.base == "projective-plane":
            return ["H"]
        if self.base == "smooth-quadric":
            return ["L'", "L''"]
        if self.base == "hirzebruch":
            return ["F", "E"]
        return list(self.basis)

    def basis_names(self) -> list[str]:
        """底格的基之后接各次爆破的例外类"""
        return self.base_basis() + [b.name for b in self.blowups]

    def _base_gram(self) -> np.ndarray:
        if self.base == "projective-plane":
            return np.array([[1]], dtype=np.int64)
        if self.base == "smooth-quadric":
            return np.array([[0, 1], [1, 0]], dtype=np.int64)
        if self.base == "hirzebruch":
            return np.array([[0, 1], [1, -self.n]], dtype=np.int64)
        return np.array(self.gram, dtype=np.int64)

    @property
    def lattice(self) -> np.ndarray:
        """完整的相交矩阵（只读）"""
        if self._lattice is None:
            base = self._base_gram()
            r, k = base.shape[0], len(self.blowups)
            full = np.zeros((r + k, r + k), dtype=np.int64)
            full[:r, :r] = base
            full[r:, r:] = -np.eye(k, dtype=np.int64)
            full.setflags(write=False)
            self._lattice = full
        return self._lattice

    def curve_class(self, name: str) -> list[int]:
        """
        命名曲线（或基元）在全部爆破之后的类向量

        Raises:
            ContractViolation: 名称未知
        """
        names = self.basis_names()
        size = len(names)
        if name in self.curves:
            vec = list(self.curves[name]) + [0] * (size - len(self.base_basis()))
            start = 0
        elif name in names:
            vec = [0] * size
            vec[names.index(name)] = 1
            start = max(0, names.index(name) - len(self.base_basis()) + 1)
        else:
            raise ContractViolation(f"未知曲线或类: {name}")

        offset = len(self.base_basis())
        for k in range(start, len(self.blowups)):
            for curve, m in self.blowups[k].through:
                if curve == name:
                    vec[offset + k] -= m
        return vec


def self_intersection(p: SurfacePresentation, class_vector) -> int:
    """
    类向量的自交数 vᵀ·L·v

    Raises:
        ContractViolation: 向量长度与基的个数不符
    """
    v = np.asarray(list(class_vector), dtype=np.int64)
    lattice = p.lattice
    if v.ndim != 1 or v.shape[0] != lattice.shape[0]:
        raise ContractViolation(f"类向量长度 {v.shape[0] if v.ndim == 1 else v.shape} ≠ 基的个数 {lattice.shape[0]}")
    return int(v @ lattice @ v)


def curve_self_intersection(p: SurfacePresentation, name: str) -> int:
    return self_intersection(p, p.curve_class(name))
