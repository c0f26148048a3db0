"""
测试命令行入口：退出码、报告格式与环境变量
"""
import os
import sys
# 将项目根目录添加到 Python 搜索路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import io
import json

import pytest

from cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, run


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("ENUMERA_SEED", "ENUMERA_JOBS", "ENUMERA_VERBOSE", "ENUMERA_FORMAT"):
        monkeypatch.delenv(name, raising=False)


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def invoke_json(*argv: str) -> tuple[int, dict]:
    code, text = invoke(*argv)
    return code, json.loads(text)


def test_tetra_ledger():
    code, report = invoke_json("tetra", "ledger", "--delta", "3")
    assert code == EXIT_PASS
    assert report["status"] == "pass"
    table = report["tables"][0]
    assert table["target_degree"] == 3200
    assert [(e["count"], e["multiplicity"]) for e in table["entries"]] == [(1024, 1), (192, 3), (24, 16), (4, 304)]
    assert list(report) == ["command", "status", "tables", "data", "violations", "seed", "timing_ms"]
    assert report["timing_ms"] == 0


def test_kummer_ledger():
    code, report = invoke_json("kummer", "ledger", "--delta", "3")
    assert code == EXIT_PASS
    assert [(e["count"], e["multiplicity"]) for e in report["tables"][0]["entries"]] == [(240, 8), (16, 80)]
    assert "seed" not in report


def test_formulas_table():
    code, report = invoke_json("formulas", "table", "--k-min", "2", "--k-max", "4")
    assert code == EXIT_PASS
    rows = report["data"]["rows"]
    assert rows[0] == {"k": 2, "d1": 2, "d2": 0, "d3": 0}
    assert rows[2] == {"k": 4, "d1": 36, "d2": 480, "d3": 3200}


def test_dejonquieres_and_plucker():
    assert invoke_json("dejonquieres", "--d", "8", "--g", "0", "--tau", "3")[1]["data"]["degree"] == 80
    code, report = invoke_json("plucker", "--d", "4", "--delta", "0", "--kappa", "0")
    assert code == EXIT_PASS
    assert report["data"]["bitangents"] == 28


def test_domain_error_is_a_failed_report():
    code, report = invoke_json("plucker", "--d", "5", "--delta", "0", "--kappa", "6")
    assert code == EXIT_FAIL
    assert report["status"] == "fail"
    assert report["violations"][0].startswith("OutOfRangeError")


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["tetra", "ledger", "--delta", "4"],
    ["tetra", "ledger"],
    ["tetra", "ledger", "--delta", "1", "--jobs", "0"],
    ["formulas", "table", "--k-min", "5", "--k-max", "3"],
    ["formulas", "table", "--k-min", "1", "--k-max", "3"],
])
def test_usage_errors(argv):
    code, text = invoke(*argv)
    assert code == EXIT_USAGE
    assert text == ""


def test_help_exits_cleanly():
    assert invoke("--help")[0] == EXIT_PASS


def test_fibre_check_builtin():
    code, report = invoke_json("fibre", "check", "--builtin", "weighted_pair")
    assert code == EXIT_PASS
    assert report["data"]["components"] == 2
    assert report["data"]["passed_curves"] == 1


def test_fibre_check_default_is_kummer():
    code, report = invoke_json("fibre", "check")
    assert code == EXIT_PASS
    assert report["data"]["double_curves"] == 128


def test_fibre_check_missing_file(tmp_path):
    code, report = invoke_json("fibre", "check", "--file", str(tmp_path / "none.json"))
    assert code == EXIT_FAIL
    assert report["violations"][0].startswith("FileNotFoundError")


def test_kummer_incidence_verify():
    code, report = invoke_json("kummer", "incidence", "--model", "grid", "--verify")
    assert code == EXIT_PASS
    assert len(report["data"]["bitmap"]) == 16
    assert report["data"]["model"] == "grid"


def test_tsv_output():
    code, text = invoke("triangle", "ledger", "--delta", "2", "--format", "tsv")
    assert code == EXIT_PASS
    lines = text.splitlines()
    assert lines[0] == "command\ttriangle ledger"
    assert lines[1] == "status\tpass"
    assert "table\tlabel\tcount\tmultiplicity\tcontribution\tprovenance" in lines
    assert any(line.startswith("V_2(triangle)\tV(W̄+W_a+W_b, δ_W̄=2)\t0\t") for line in lines)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("ENUMERA_SEED", "7")
    code, report = invoke_json("tetra", "ledger", "--delta", "1")
    assert code == EXIT_PASS
    assert report["seed"] == 7
    # 命令行参数优先于环境变量
    assert invoke_json("tetra", "ledger", "--delta", "1", "--seed", "3")[1]["seed"] == 3


def test_bad_environment(monkeypatch):
    monkeypatch.setenv("ENUMERA_FORMAT", "xml")
    assert invoke("triangle", "ledger", "--delta", "1")[0] == EXIT_USAGE


def test_output_is_deterministic():
    argv = ("tetra", "monoid", "--face", "2")
    first, second = invoke(*argv), invoke(*argv)
    assert first == second
    report = json.loads(first[1])
    assert report["data"]["residual_degree"] == 348


def test_timing_flag():
    report = invoke_json("triangle", "ledger", "--delta", "1", "--timing")[1]
    assert report["timing_ms"] >= 0
