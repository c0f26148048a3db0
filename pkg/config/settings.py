"""
运行时设置
从环境变量（可由 .env 文件提供）读取运行参数
"""
import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from .defaults import TETRA_DEFAULTS, OUTPUT_FORMATS


class Settings(BaseModel):
    """命令行与库共享的运行设置"""
    seed: int = Field(default=TETRA_DEFAULTS["seed"], description="四面体构型的默认随机种子")
    jobs: int = Field(default=1, ge=1, description="分区扫描使用的进程数")
    verbose: bool = Field(default=False, description="是否在标准错误输出进度日志")
    output_format: str = Field(default="json", description="报告输出格式：json 或 tsv")

    @field_validator("output_format")
    @classmethod
    def _check_format(cls, value: str) -> str:
        if value not in OUTPUT_FORMATS:
            raise ValueError(f"不支持的输出格式: {value}，可选: {', '.join(OUTPUT_FORMATS)}")
        return value


def _env_flag(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


def load_settings(use_dotenv: bool = True) -> Settings:
    """
    读取 ENUMERA_* 环境变量构造设置

    Args:
        use_dotenv: 是否先加载当前目录下的 .env 文件

    Returns:
        Settings: 设置对象

    Raises:
        ValueError: 环境变量无法解析时
    """
    if use_dotenv:
        load_dotenv()

    values = {}
    try:
        if os.getenv("ENUMERA_SEED"):
            values["seed"] = int(os.getenv("ENUMERA_SEED"))
        if os.getenv("ENUMERA_JOBS"):
            values["jobs"] = int(os.getenv("ENUMERA_JOBS"))
    except ValueError as e:
        raise ValueError(f"环境变量不是合法整数: {e}")
    if os.getenv("ENUMERA_VERBOSE"):
        values["verbose"] = _env_flag(os.getenv("ENUMERA_VERBOSE"))
    if os.getenv("ENUMERA_FORMAT"):
        values["output_format"] = os.getenv("ENUMERA_FORMAT")
    return Settings(**values)
