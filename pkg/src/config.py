import os

from pydantic import BaseModel, Field


class Settings(BaseModel):
    """Runtime settings, all optional"""

    budget: int = Field(default=1_000_000, gt=0)
    log_level: str = "WARNING"
    workers: int = Field(default=4, gt=0)
    seed: int = 20240611


def load_settings() -> Settings:
    """Read settings from the environment"""
    values = {
        "budget": os.getenv("SKEWPBW_BUDGET"),
        "log_level": os.getenv("SKEWPBW_LOG_LEVEL"),
        "workers": os.getenv("SKEWPBW_WORKERS"),
        "seed": os.getenv("SKEWPBW_SEED"),
    }
    return Settings(**{key: value for key, value in values.items() if value is not None})
