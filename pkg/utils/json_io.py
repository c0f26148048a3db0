"""
JSON 读写工具
固定缩进与键序，保证输出字节级可复现
"""
import json
from pathlib import Path
from typing import Any


def canonical_dumps(obj: Any) -> str:
    """按插入顺序输出带缩进的 JSON，末尾带换行"""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_json_file(path) -> Any:
    """
    读取 JSON 文件

    Args:
        path: 文件路径

    Returns:
        解析后的对象

    Raises:
        FileNotFoundError: 文件不存在
        ValueError: 内容不是合法 JSON
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"JSON 文件不存在: {path}")
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"JSON 解析失败 ({path}): {e}")
