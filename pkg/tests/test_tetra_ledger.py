"""
测试四面体退化账本、单值曲面粗极限与一般点审计
"""
import os
import sys
# 将项目根目录添加到 Python 搜索路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest

from config.models import LedgerEntry
from geometry import build_config
from kernel.errors import ContractViolation, InternalConsistencyError, UnsupportedDeltaError
from ledgers import (
    LedgerBuilderBase,
    MonoidLedgerBuilder,
    enumerate_ledger,
    general_point_audit,
    monoid_crude_limit,
    monoid_residual_degree
)

EXPECTED = {
    1: [(24, 1), (4, 3)],
    2: [(240, 1), (48, 3), (6, 16)],
    3: [(1024, 1), (192, 3), (24, 16), (4, 304)],
}


def pairs(ledger):
    return [(e.count, e.multiplicity) for e in ledger.entries]


@pytest.fixture(scope="module")
def config():
    return build_config(seed=0)


@pytest.mark.parametrize("delta", [1, 2, 3])
def test_tetrahedron_ledgers(config, delta):
    ledger = enumerate_ledger(config, delta)
    assert pairs(ledger) == EXPECTED[delta]
    assert ledger.total == ledger.target_degree == {1: 36, 2: 480, 3: 3200}[delta]


def test_other_seed_gives_same_ledger():
    other = build_config(seed=5)
    for delta in (1, 2, 3):
        assert pairs(enumerate_ledger(other, delta)) == EXPECTED[delta]


def test_partitioned_scan_matches_serial(config):
    assert enumerate_ledger(config, 3, jobs=2) == enumerate_ledger(config, 3, jobs=1)


def test_unsupported_delta(config):
    with pytest.raises(UnsupportedDeltaError):
        enumerate_ledger(config, 4)


def test_ledger_json_keeps_key_order(config):
    data = enumerate_ledger(config, 1).to_json_dict()
    assert list(data) == ["target_name", "target_degree", "entries"]
    assert list(data["entries"][0]) == ["label", "count", "multiplicity", "provenance"]


class TestMonoid:

    @pytest.mark.parametrize("face", [1, 2, 3, 4])
    def test_crude_limit(self, config, face):
        ledger = monoid_crude_limit(config, face)
        assert pairs(ledger) == [(21, 1), (1, 3), (12, 1)]
        assert ledger.total == 36

    def test_e_curves_meeting_face(self, config):
        labels = MonoidLedgerBuilder(config, 1).e_curve_labels()
        assert len(labels) == 12
        assert all("1" in label.split("_")[1] for label in labels)

    def test_general_point_audit(self, config):
        audit = general_point_audit(config, 2)
        assert pairs(audit) == [(192, 1), (36, 3), (3, 16), (132, 1)]
        assert audit.total == 480
        assert monoid_residual_degree(audit) == 348

    @pytest.mark.parametrize("face", [0, 5, True])
    def test_bad_face(self, config, face):
        with pytest.raises(ContractViolation):
            monoid_crude_limit(config, face)

    def test_only_one_node(self, config):
        with pytest.raises(ContractViolation):
            MonoidLedgerBuilder(config, 1).build(2)


def test_builder_rejects_wrong_total():
    class Broken(LedgerBuilderBase):
        family = "broken"

        def build(self, delta):
            entry = LedgerEntry(label="x", count=1, multiplicity=1, provenance="test")
            return self._assemble("broken", 2, [entry])

    with pytest.raises(InternalConsistencyError):
        Broken().build(1)
