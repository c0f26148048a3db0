"""
数据集加载器
从 config/datasets/ 或任意路径加载 JSON 文档，并按给定的 Pydantic 模型校验
"""
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from utils.json_io import load_json_file

ModelT = TypeVar("ModelT", bound=BaseModel)

DATASET_DIR = Path(__file__).parent / "datasets"


def dataset_path(name: str) -> Path:
    """
    内置数据集的文件路径

    Args:
        name: 数据集名称（不含 .json 后缀），如 'weighted_pair'

    Raises:
        FileNotFoundError: 数据集不存在
    """
    path = DATASET_DIR / f"{name}.json"
    if not path.exists():
        available = sorted(p.stem for p in DATASET_DIR.glob("*.json"))
        raise FileNotFoundError(f"内置数据集不存在: {name}，可用: {', '.join(available)}")
    return path


def list_datasets() -> list[str]:
    return sorted(p.stem for p in DATASET_DIR.glob("*.json"))


def load_model_file(path, model_cls: type[ModelT]) -> ModelT:
    """
    读取 JSON 文件并校验为 model_cls

    Raises:
        FileNotFoundError: 文件不存在
        ValueError: JSON 不合法，或不符合模型（列出出错位置）
    """
    raw = load_json_file(path)
    try:
        return model_cls.model_validate(raw)
    except ValidationError as e:
        locations = "; ".join(
            f"{'.'.join(str(x) for x in err['loc']) or '<root>'}: {err['msg']}" for err in e.errors()
        )
        raise ValueError(f"{path} 不符合 {model_cls.__name__} 格式: {locations}")


def load_dataset(name: str, model_cls: type[ModelT]) -> ModelT:
    """按名称加载内置数据集"""
    return load_model_file(dataset_path(name), model_cls)
