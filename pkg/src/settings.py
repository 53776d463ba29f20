from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Literal, Optional

from pydantic import BaseModel, Field

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class Settings(BaseModel):
    """Runtime knobs, filled only from command-line flags."""
    max_concurrent_tasks: int = Field(4, ge=1, description="Rows computed at the same time (--jobs).")
    workers: int = Field(1, ge=1, description="Worker processes; 1 keeps rows in the default thread pool (--workers).")
    log_level: LogLevel = Field("WARNING", description="Logging threshold on stderr (--log-level).")
    brute_force_warn_threshold: int = Field(
        10**6, ge=0, description="Estimated brute-force search size above which a warning is logged."
    )

    def make_executor(self) -> Optional[Executor]:
        if self.workers > 1:
            return ProcessPoolExecutor(max_workers=self.workers)
        return None
