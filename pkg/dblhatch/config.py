import os
from functools import lru_cache

from pydantic import BaseModel, ConfigDict

DEFAULT_BUDGET = 10_000_000


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    # partial search nodes an operation may visit before BudgetExceeded
    budget: int = DEFAULT_BUDGET
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Read settings from the environment once per process."""
    return Settings(
        budget=int(os.getenv("DBLHATCH_BUDGET", str(DEFAULT_BUDGET))),
        log_level=os.getenv("DBLHATCH_LOG_LEVEL", "WARNING").upper(),
    )
