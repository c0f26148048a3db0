"""
报告服务
构建命令报告，并渲染为 JSON 或 TSV
"""
import json
import time
from contextlib import contextmanager
from typing import Any, Iterable, Optional

import pandas as pd

from config.defaults import OUTPUT_FORMATS
from config.models import ComponentLedger, Report
from kernel.errors import ContractViolation
from utils.json_io import canonical_dumps

_LEDGER_COLUMNS = ["table", "label", "count", "multiplicity", "contribution", "provenance"]


def _is_row_list(value) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(v, dict) for v in value)


def _compact(value) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(",", ":"))


class ReportService:
    """命令报告的构建与渲染服务"""

    @staticmethod
    def make_report(
        command: str,
        tables: Iterable[ComponentLedger] = (),
        data: Optional[dict[str, Any]] = None,
        violations: Iterable[str] = (),
        seed: Optional[int] = None,
        timing_ms: int = 0
    ) -> Report:
        """
        构建报告，status 由违反项是否为空决定

        Args:
            command: 命令名称（如 'tetra ledger'）
            tables: 分量账本
            data: 其他数值结果
            violations: 违反项
            seed: 使用的种子
            timing_ms: 耗时

        Returns:
            Report: 报告对象
        """
        violations = list(violations)
        return Report(
            command=command,
            status="pass" if not violations else "fail",
            tables=list(tables),
            data=dict(data or {}),
            violations=violations,
            seed=seed,
            timing_ms=timing_ms,
        )

    @staticmethod
    def to_dict(report: Report) -> dict:
        """固定键序的字典表示"""
        out = {
            "command": report.command,
            "status": report.status,
            "tables": [t.to_json_dict() for t in report.tables],
            "data": report.data,
            "violations": report.violations,
        }
        if report.seed is not None:
            out["seed"] = report.seed
        out["timing_ms"] = report.timing_ms
        return out

    @staticmethod
    def to_json(report: Report) -> str:
        return canonical_dumps(ReportService.to_dict(report))

    @staticmethod
    def to_tsv(report: Report) -> str:
        """
        TSV 输出：账本行、data 键值行与违反项依次排列，块之间空一行

        data 中的行列表（字典列表）单独成表，其余嵌套值以紧凑 JSON 写入单元格。
        """
        blocks = [f"command\t{report.command}\nstatus\t{report.status}\n"]
        if report.seed is not None:
            blocks[0] += f"seed\t{report.seed}\n"

        rows = [
            {
                "table": t.target_name,
                "label": e.label,
                "count": e.count,
                "multiplicity": e.multiplicity,
                "contribution": e.contribution,
                "provenance": e.provenance,
            }
            for t in report.tables
            for e in list(t.entries) + list(t.null_components)
        ]
        if rows:
            blocks.append(pd.DataFrame(rows, columns=_LEDGER_COLUMNS).to_csv(sep="\t", index=False, lineterminator="\n"))

        scalars = {}
        for key, value in report.data.items():
            if _is_row_list(value):
                blocks.append(f"# {key}\n" + pd.DataFrame(value).to_csv(sep="\t", index=False, lineterminator="\n"))
            else:
                scalars[key] = value if isinstance(value, (int, str, bool)) else _compact(value)
        if scalars:
            frame = pd.DataFrame({"key": list(scalars.keys()), "value": list(scalars.values())})
            blocks.append(frame.to_csv(sep="\t", index=False, lineterminator="\n"))

        if report.violations:
            frame = pd.DataFrame({"violation": report.violations})
            blocks.append(frame.to_csv(sep="\t", index=False, lineterminator="\n"))
        return "\n".join(blocks)

    @staticmethod
    def render(report: Report, output_format: str = "json") -> str:
        """
        按格式渲染报告

        Raises:
            ContractViolation: 不支持的格式
        """
        if output_format == "json":
            return ReportService.to_json(report)
        if output_format == "tsv":
            return ReportService.to_tsv(report)
        raise ContractViolation(f"不支持的输出格式: {output_format}，可选: {', '.join(OUTPUT_FORMATS)}")


@contextmanager
def stopwatch(enabled: bool = True):
    """计时上下文，产出一个字典，退出时写入 elapsed_ms；未启用时为 0"""
    box = {"elapsed_ms": 0}
    start = time.perf_counter()
    try:
        yield box
    finally:
        if enabled:
            box["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
