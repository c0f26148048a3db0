"""
16_6 构型导出
16 行 ASCII 位图与 JSON
"""
from .incidence import Incidence16_6


def to_ascii_bitmap(inc: Incidence16_6) -> str:
    """每个节点一行，第 j 列为 1 表示节点位于第 j 个 trope 上"""
    return "\n".join("".join("1" if x else "0" for x in row) for row in inc.matrix) + "\n"


def to_json_dict(inc: Incidence16_6) -> dict:
    return {
        "model": inc.name,
        "nodes": list(inc.nodes),
        "tropes": list(inc.tropes),
        "incidence": [[int(x) for x in row] for row in inc.matrix],
    }
