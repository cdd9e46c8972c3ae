"""
Runtime settings.

Values come from KUMMER_HW_* environment variables; the CLI overrides them
with flags where one exists.
"""

import os
from functools import lru_cache

from pydantic import BaseModel, Field

ENV_PREFIX = "KUMMER_HW_"


class Settings(BaseModel):
    """Knobs shared by the sweeps, the field tables and the self-test."""

    workers: int = Field(default=1, ge=0, description="processes for sweeps; 0 = all CPUs")
    search_limit: int = Field(default=2_000_000, ge=1)
    witness_cap: int = Field(default=50, ge=0)
    table_limit: int = Field(default=4096, ge=2, description="largest q with log tables")
    seed: int = 20071010

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        values = {}
        for name in cls.model_fields:
            raw = environ.get(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        return cls(**values)

    def worker_count(self, override=None):
        workers = self.workers if override is None else override
        return workers or os.cpu_count() or 1


@lru_cache(maxsize=1)
def get_settings():
    return Settings.from_env()
