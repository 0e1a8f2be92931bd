"""
任务管理模块
提供分析任务队列和批处理功能
"""

from tasks.task_queue import TaskQueue, AnalysisTask, TaskStatus
from tasks.batch_processor import BatchProcessor, exit_code_for

__all__ = ['TaskQueue', 'AnalysisTask', 'TaskStatus', 'BatchProcessor', 'exit_code_for']
