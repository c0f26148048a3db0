"""
Kummer 退化的分量账本
对偶 Kummer 曲面、节点对应的极限与 trope 平面，各项数量都由 16_6 构型或公式现算
"""
from math import comb

from config.defaults import KUMMER_NODE_MULTIPLICITIES
from config.models import ComponentLedger, LedgerEntry
from formulas import branch_curve_tangent_degrees, dual_surface_degree, severi_degree
from kernel.errors import InternalConsistencyError
from kummer.incidence import Incidence16_6, build_theta_model, count_offtrope_triples, node_pair_count

from .base import LedgerBuilderBase


class KummerLedgerBuilder(LedgerBuilderBase):
    """Kummer 曲面退化的账本构建器"""

    family = "kummer"

    def __init__(self, incidence: Incidence16_6 = None):
        self.incidence = incidence if incidence is not None else build_theta_model()

    def build(self, delta: int) -> ComponentLedger:
        self._check_delta(delta)
        nodes = len(self.incidence.nodes)
        mult = KUMMER_NODE_MULTIPLICITIES[delta]

        if delta == 1:
            entries = [
                LedgerEntry(
                    label="dual Kummer surface",
                    count=dual_surface_degree(4, nodes, 0),
                    multiplicity=1,
                    provenance="dual_surface_degree(4, 16, 0)",
                ),
                LedgerEntry(
                    label="planes through a node",
                    count=nodes,
                    multiplicity=mult,
                    provenance="node count of the 16_6 configuration; cited multiplicity 2",
                ),
            ]
        elif delta == 2:
            pairs = node_pair_count(self.incidence)
            if pairs != comb(nodes, 2):
                raise InternalConsistencyError(f"节点对计数 {pairs} ≠ C({nodes},2)")
            entries = [
                LedgerEntry(
                    label="pencils of planes through two nodes",
                    count=pairs,
                    multiplicity=mult,
                    provenance="node pairs on exactly two common tropes; cited multiplicity 4",
                ),
            ]
        else:
            entries = [
                LedgerEntry(
                    label="planes through three nodes on no common trope",
                    count=count_offtrope_triples(self.incidence),
                    multiplicity=mult,
                    provenance="off-trope triple scan; multiplicity 8 from three quadrics meeting in 8 points",
                ),
                LedgerEntry(
                    label="trope planes",
                    count=len(self.incidence.tropes),
                    multiplicity=branch_curve_tangent_degrees()[2],
                    provenance="branch_curve_tangent_degrees()[2] = dejonquieres(8, 0, 3) for the rational octic branch curve",
                ),
            ]
        return self._assemble(f"V_{delta}(kummer)", severi_degree(4, delta), entries)


def kummer_ledger(delta: int) -> ComponentLedger:
    """Kummer 退化 δ 的账本：4 + 16·2, 120·4, 240·8 + 16·80"""
    return KummerLedgerBuilder().build(delta)
