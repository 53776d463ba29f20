# src/task.py
import uuid
from enum import Enum
from typing import Any, Dict, List, Optional


class TaskStatus(Enum):
    QUEUED = "queued"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class TaskType(Enum):
    GF = "gf"
    BRUTE_STACK = "brute-stack"
    BRUTE_PATH = "brute-path"


class Task:
    """One row of counts: s_{m,d}(0..n_max) by a single counting method."""

    def __init__(self, name: str, payload: Dict[str, Any], task_type: TaskType):
        self.id = str(uuid.uuid4())
        self.name = name
        self.payload = payload
        self.task_type = task_type
        self.status = TaskStatus.QUEUED
        self.result: Optional[List[int]] = None
        self.error: Optional[str] = None

    def __repr__(self):
        return f"Task(id={self.id}, name='{self.name}', type={self.task_type.name}, status={self.status.name})"

    @classmethod
    def row(cls, method: str, m: int, d: int, n_max: int) -> "Task":
        return cls(
            name=f"{method} m={m} d={d} n<={n_max}",
            payload={"m": m, "d": d, "n_max": n_max},
            task_type=TaskType(method),
        )

    def is_done(self) -> bool:
        return self.status in (TaskStatus.COMPLETED, TaskStatus.FAILED)

    def update_status(self, status: TaskStatus):
        self.status = status

    def complete(self, result: List[int]):
        self.update_status(TaskStatus.COMPLETED)
        self.result = result

    def fail(self, error_message: str):
        self.update_status(TaskStatus.FAILED)
        self.error = error_message
