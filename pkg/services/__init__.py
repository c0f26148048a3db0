"""
服务层模块
提供可复用的业务服务：报告构建、计时与渲染
"""
from .report_service import ReportService, stopwatch

__all__ = ['ReportService', 'stopwatch']
