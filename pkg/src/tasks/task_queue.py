"""
分析任务队列（仅内存）
"""

from dataclasses import dataclass, field
from typing import Dict, Any, Optional, List
from enum import Enum
from datetime import datetime


class TaskStatus(Enum):
    """任务状态枚举"""
    PENDING = "pending"
    PROCESSING = "processing"
    COMPLETED = "completed"
    FAILED = "failed"


FINISHED_STATUSES = (TaskStatus.COMPLETED, TaskStatus.FAILED)


@dataclass
class AnalysisTask:
    """对一个代数文档执行一条子命令"""

    task_id: str
    source: str
    """文档路径或 catalog:NAME"""

    command: str = "analyze"
    output_path: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)

    # 任务状态
    status: TaskStatus = TaskStatus.PENDING
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None

    # 结果
    error_message: Optional[str] = None
    exit_code: int = 0
    result: Optional[Dict[str, Any]] = None


class TaskQueue:
    """任务队列类"""

    def __init__(self):
        self.tasks: Dict[str, AnalysisTask] = {}

    def add_task(self, task: AnalysisTask) -> None:
        """
        添加任务

        Raises:
            ValueError: task_id 重复
        """
        if task.task_id in self.tasks:
            raise ValueError(f"duplicate task id: {task.task_id}")
        self.tasks[task.task_id] = task

    def get_task(self, task_id: str) -> Optional[AnalysisTask]:
        return self.tasks.get(task_id)

    def update_task_status(
        self,
        task_id: str,
        status: TaskStatus,
        error_message: Optional[str] = None,
        result: Optional[Dict[str, Any]] = None,
        exit_code: Optional[int] = None
    ) -> None:
        """
        更新任务状态

        Args:
            task_id: 任务ID
            status: 新状态
            error_message: 错误信息
            result: 结果数据
            exit_code: 与 CLI 一致的退出码
        """
        task = self.tasks.get(task_id)
        if not task:
            return

        task.status = status

        if status == TaskStatus.PROCESSING and not task.started_at:
            task.started_at = datetime.now()

        if status in FINISHED_STATUSES:
            task.completed_at = datetime.now()

        if error_message:
            task.error_message = error_message

        if result:
            task.result = result

        if exit_code is not None:
            task.exit_code = exit_code

    def get_pending_tasks(self) -> List[AnalysisTask]:
        return self.get_tasks_by_status(TaskStatus.PENDING)

    def get_tasks_by_status(self, status: TaskStatus) -> List[AnalysisTask]:
        return [
            task for task in self.tasks.values()
            if task.status == status
        ]

    def get_statistics(self) -> Dict[str, int]:
        """各状态的任务数"""
        stats = {'total': len(self.tasks)}
        stats.update({status.value: 0 for status in TaskStatus})

        for task in self.tasks.values():
            stats[task.status.value] += 1

        return stats

    def __len__(self) -> int:
        return len(self.tasks)

    def __repr__(self) -> str:
        stats = self.get_statistics()
        return f"TaskQueue(total={stats['total']}, pending={stats['pending']}, completed={stats['completed']})"
