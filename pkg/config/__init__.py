"""
配置模块
包含默认参数、运行设置、数据模型定义与数据集加载
"""
from .models import (
    SeveriDegreeInput,
    PluckerInput,
    PencilBudget,
    LedgerEntry,
    ComponentLedger,
    GenericityReport,
    Report
)
from .settings import Settings, load_settings
from .dataset_loader import dataset_path, list_datasets, load_model_file, load_dataset

__all__ = [
    'SeveriDegreeInput',
    'PluckerInput',
    'PencilBudget',
    'LedgerEntry',
    'ComponentLedger',
    'GenericityReport',
    'Report',
    'Settings',
    'load_settings',
    'dataset_path',
    'list_datasets',
    'load_model_file',
    'load_dataset'
]
