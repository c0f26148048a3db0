"""
工具函数模块
包含控制台日志输出与 JSON 读写工具
"""
from . import console
from .json_io import canonical_dumps, load_json_file

__all__ = [
    'console',
    'canonical_dumps',
    'load_json_file'
]
