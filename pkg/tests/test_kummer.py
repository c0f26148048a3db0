"""
测试 16_6 构型：两个模型的不变量、三元组划分、导出与 Kummer 账本
"""
import os
import sys
# 将项目根目录添加到 Python 搜索路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from math import comb

import numpy as np
import pytest

from formulas import branch_curve_tangent_degrees
from kernel.errors import ContractViolation, UnsupportedDeltaError
from kummer import (
    Incidence16_6,
    build_grid_model,
    build_theta_model,
    check_triple_partition,
    count_offtrope_triples,
    grid_index,
    node_pair_count,
    offtrope_triples,
    ontrope_triples,
    to_ascii_bitmap,
    to_json_dict,
    verify_incidence
)
from ledgers import KummerLedgerBuilder, kummer_ledger


@pytest.fixture(scope="module", params=["theta", "grid"])
def inc(request):
    return build_theta_model() if request.param == "theta" else build_grid_model()


class TestIncidence:
    def test_invariants_hold(self, inc):
        assert verify_incidence(inc) == []
        assert check_triple_partition(inc) == []

    def test_shape_and_degrees(self, inc):
        assert inc.matrix.shape == (16, 16)
        assert (inc.matrix.sum(axis=0) == 6).all()
        assert (inc.matrix.sum(axis=1) == 6).all()

    def test_triples(self, inc):
        assert count_offtrope_triples(inc) == 240
        assert len(offtrope_triples(inc)) == 240
        assert len(ontrope_triples(inc)) == 16 * comb(6, 3)

    def test_node_pairs(self, inc):
        assert node_pair_count(inc) == 120

    def test_matrix_is_read_only(self, inc):
        with pytest.raises(ValueError):
            inc.matrix[0, 0] = not inc.matrix[0, 0]


def test_theta_empty_node_lies_on_singletons():
    inc = build_theta_model()
    assert inc.nodes[0] == "n∅"
    assert [inc.tropes[j] for j in inc.tropes_through(0)] == ["t1", "t2", "t3", "t4", "t5", "t6"]


def test_theta_pair_node():
    inc = build_theta_model()
    node = inc.nodes.index("n34")
    labels = {inc.tropes[j] for j in inc.tropes_through(node)}
    assert {"t3", "t4", "t134|256"} <= labels
    assert "t1" not in labels


def test_grid_common_tropes():
    inc = build_grid_model()
    common = inc.common_tropes([grid_index(1, 1), grid_index(2, 2)])
    assert [inc.tropes[j] for j in common] == ["t12", "t21"]
    # 节点 (a, b) 不在 trope (a, b) 上
    assert not inc.matrix[grid_index(3, 4), grid_index(3, 4)]


def test_trope_index():
    inc = build_theta_model()
    assert inc.trope_index("t6") == 5
    with pytest.raises(ContractViolation):
        inc.trope_index("t7")


def test_broken_incidence_is_reported():
    matrix = build_grid_model().matrix.copy()
    matrix[0, 0] = True
    broken = Incidence16_6("broken", tuple(f"n{i}" for i in range(16)), tuple(f"t{j}" for j in range(16)), matrix)
    violations = verify_incidence(broken)
    assert any("位于 7 个 trope" in v for v in violations)


def test_wrong_shape():
    with pytest.raises(ContractViolation):
        Incidence16_6("bad", ("a",), ("b", "c"), np.zeros((2, 2), dtype=bool))


class TestExport:
    def test_bitmap(self, inc):
        text = to_ascii_bitmap(inc)
        lines = text.splitlines()
        assert text.endswith("\n")
        assert len(lines) == 16
        assert all(len(line) == 16 and line.count("1") == 6 for line in lines)

    def test_json(self, inc):
        data = to_json_dict(inc)
        assert list(data) == ["model", "nodes", "tropes", "incidence"]
        assert data["model"] == inc.name
        assert sum(map(sum, data["incidence"])) == 96


class TestKummerLedger:
    @pytest.mark.parametrize("delta,expected,total", [
        (1, [(4, 1), (16, 2)], 36),
        (2, [(120, 4)], 480),
        (3, [(240, 8), (16, 80)], 3200),
    ])
    def test_golden(self, delta, expected, total):
        result = kummer_ledger(delta)
        assert [(e.count, e.multiplicity) for e in result.entries] == expected
        assert result.total == total
        assert result.target_name == f"V_{delta}(kummer)"

    def test_trope_planes_use_branch_curve_degree(self):
        trope_planes = kummer_ledger(3).entries[1]
        assert trope_planes.multiplicity == branch_curve_tangent_degrees()[2]
        assert trope_planes.provenance.startswith("branch_curve_tangent_degrees()[2]")

    def test_grid_model_gives_same_ledger(self):
        for delta in (1, 2, 3):
            assert KummerLedgerBuilder(build_grid_model()).build(delta) == kummer_ledger(delta)

    def test_unsupported_delta(self):
        with pytest.raises(UnsupportedDeltaError):
            kummer_ledger(4)
