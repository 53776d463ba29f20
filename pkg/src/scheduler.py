# src/scheduler.py
import asyncio
import logging
from concurrent.futures import Executor
from typing import Any, Dict, List, Optional

from .counting import count_row
from .task import Task, TaskStatus

logger = logging.getLogger(__name__)


class Scheduler:
    """
    Runs counting rows concurrently. At most ``max_concurrent_tasks`` rows are
    in flight at once; each row runs in ``executor`` (the default thread pool
    when None), and ``run`` hands results back in submission order.
    """

    def __init__(self, max_concurrent_tasks: int = 4, executor: Optional[Executor] = None):
        self.max_concurrent_tasks = max_concurrent_tasks
        self.semaphore = asyncio.Semaphore(max_concurrent_tasks)
        self.executor = executor

        self.pending_queue: asyncio.Queue = asyncio.Queue()
        self.tasks: Dict[str, Task] = {}
        self._order: List[str] = []
        self._lock = asyncio.Lock()

        # Statistics
        self.completed_tasks_count = 0
        self.failed_tasks_count = 0
        self.running_tasks_count = 0

    async def add_task(self, task: Task) -> Task:
        """Adds a new row to the scheduler's queue."""
        async with self._lock:
            self.tasks[task.id] = task
            self._order.append(task.id)
        await self.pending_queue.put(task)
        logger.debug(f"Task {task.id} ({task.name}) added to the queue.")
        return task

    def get_task_status(self, task_id: str) -> Optional[str]:
        task = self.tasks.get(task_id)
        return task.status.value if task else None

    def get_task_result(self, task_id: str) -> Any:
        task = self.tasks.get(task_id)
        if task:
            return task.result
        return None

    async def run(self) -> List[Task]:
        """Drains the queue, waits for every row, returns all tasks in submission order."""
        drivers = []
        while not self.pending_queue.empty():
            task = self.pending_queue.get_nowait()
            drivers.append(asyncio.create_task(self._drive_task(task)))
        await asyncio.gather(*drivers)
        return [self.tasks[task_id] for task_id in self._order]

    async def _drive_task(self, task: Task):
        logger.debug(f"Task '{task.name}' ({task.id}) waiting for semaphore.")
        async with self.semaphore:
            async with self._lock:
                self.running_tasks_count += 1
            task.update_status(TaskStatus.RUNNING)
            logger.info(f"--- Driving task: '{task.name}' ({task.id}) ---")
            loop = asyncio.get_running_loop()
            try:
                p = task.payload
                result = await loop.run_in_executor(
                    self.executor, count_row, task.task_type.value, p["m"], p["d"], p["n_max"]
                )
                task.complete(result)
            except Exception as e:
                logger.error(f"An error occurred while driving task {task.id} ({task.name}): {e}", exc_info=True)
                task.fail(str(e))
            finally:
                await self._handle_task_completion(task)

    async def _handle_task_completion(self, task: Task):
        async with self._lock:
            self.running_tasks_count -= 1
            if task.status == TaskStatus.COMPLETED:
                self.completed_tasks_count += 1
                logger.info(f"--- Task '{task.name}' ({task.id}) COMPLETED ---")
            elif task.status == TaskStatus.FAILED:
                self.failed_tasks_count += 1
                logger.error(f"--- Task '{task.name}' ({task.id}) FAILED: {task.error} ---")

    async def get_stats(self) -> Dict[str, Any]:
        async with self._lock:
            return {
                "running_tasks": self.running_tasks_count,
                "pending_tasks": self.pending_queue.qsize(),
                "total_known_tasks": len(self.tasks),
                "completed_tasks": self.completed_tasks_count,
                "failed_tasks": self.failed_tasks_count,
                "max_concurrent_tasks": self.max_concurrent_tasks,
            }


def run_rows(tasks: List[Task], max_concurrent_tasks: int = 4, executor: Optional[Executor] = None) -> List[Task]:
    """Synchronous entry point used by the CLI."""

    async def _run() -> List[Task]:
        scheduler = Scheduler(max_concurrent_tasks=max_concurrent_tasks, executor=executor)
        for task in tasks:
            await scheduler.add_task(task)
        done = await scheduler.run()
        stats = await scheduler.get_stats()
        logger.info(f"Scheduler finished: {stats}")
        return done

    return asyncio.run(_run())
