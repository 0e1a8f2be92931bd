"""
批量处理器
把相互独立的分析任务分发到线程池
"""

import concurrent.futures
import logging
import threading
import traceback
from datetime import datetime
from typing import Any, Callable, Dict, Optional

from errors import InputError, InvariantViolation
from tasks.task_queue import AnalysisTask, TaskQueue, TaskStatus
from utils import ProgressTracker

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


def exit_code_for(error: BaseException) -> int:
    """InputError / FileNotFoundError 为 1，其余（含 InvariantViolation）为 2"""
    if isinstance(error, (InputError, FileNotFoundError)):
        return EXIT_INPUT_ERROR
    return EXIT_INVARIANT_VIOLATION


class BatchProcessor:
    """批量处理器类"""

    def __init__(
        self,
        task_queue: TaskQueue,
        config: Dict[str, Any],
        runner: Optional[Callable[[AnalysisTask], Dict[str, Any]]] = None
    ):
        """
        初始化批处理器

        Args:
            task_queue: 任务队列
            config: batch 配置节（max_workers、progress）
            runner: 执行单个任务的函数，返回结果摘要
        """
        self.task_queue = task_queue
        self.config = config
        self.runner = runner

        self.max_workers = max(1, int(config.get('max_workers', 2)))
        self.show_progress = bool(config.get('progress', True))

        self._lock = threading.Lock()
        self.stats: Dict[str, Any] = {
            'total_processed': 0,
            'successful': 0,
            'failed': 0,
            'start_time': None,
            'end_time': None
        }

    def _count(self, key: str) -> None:
        with self._lock:
            self.stats[key] += 1

    def process_single_task(self, task: AnalysisTask) -> bool:
        """
        处理单个任务，计算是确定性的，失败不重试

        Returns:
            是否成功
        """
        if self.runner is None:
            raise ValueError("no task runner configured")

        logger.info(f"start task {task.task_id}: {task.command} {task.source}")
        self.task_queue.update_task_status(task.task_id, TaskStatus.PROCESSING)

        try:
            result = self.runner(task)
        except (InputError, FileNotFoundError, InvariantViolation) as e:
            code = exit_code_for(e)
            logger.error(f"task {task.task_id} failed (exit {code}): {e}")
            self.task_queue.update_task_status(
                task.task_id, TaskStatus.FAILED, error_message=str(e), exit_code=code
            )
            self._count('failed')
            return False
        except Exception as e:
            logger.error(f"task {task.task_id} crashed: {e}")
            logger.debug(traceback.format_exc())
            self.task_queue.update_task_status(
                task.task_id, TaskStatus.FAILED, error_message=str(e), exit_code=EXIT_INVARIANT_VIOLATION
            )
            self._count('failed')
            return False

        self.task_queue.update_task_status(task.task_id, TaskStatus.COMPLETED, result=result, exit_code=EXIT_OK)
        logger.info(f"task {task.task_id} done")
        self._count('successful')
        return True

    def process_all_pending(self) -> Dict[str, Any]:
        """
        处理所有待处理任务

        Returns:
            处理结果统计
        """
        pending_tasks = self.task_queue.get_pending_tasks()

        if not pending_tasks:
            logger.info("no pending tasks")
            return self.stats

        logger.info(f"processing {len(pending_tasks)} tasks with {self.max_workers} workers")

        self.stats['start_time'] = datetime.now()
        self.stats['total_processed'] = 0
        self.stats['successful'] = 0
        self.stats['failed'] = 0

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {
                executor.submit(self.process_single_task, task): task
                for task in pending_tasks
            }

            with ProgressTracker(len(futures), "analysing", disable=not self.show_progress) as progress:
                for future in concurrent.futures.as_completed(futures):
                    future.result()
                    self._count('total_processed')
                    progress.update(1)

        self.stats['end_time'] = datetime.now()
        duration = (self.stats['end_time'] - self.stats['start_time']).total_seconds()
        self.stats['duration_seconds'] = duration

        logger.info(
            f"batch finished: {self.stats['successful']} ok, {self.stats['failed']} failed, "
            f"{duration:.2f}s"
        )

        return self.stats

    def exit_code(self) -> int:
        """所有任务中最大的退出码"""
        codes = [task.exit_code for task in self.task_queue.tasks.values()]
        return max(codes, default=EXIT_OK)
