"""Runtime settings.

The only tunable read from the environment is the memo-table cap
``UMBRAL_TSH_CACHE_SIZE``; everything else is a command-line flag.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class UmbralSettings(BaseSettings):
    """Settings shared by the combinatorial memo tables."""

    model_config = SettingsConfigDict(env_prefix="UMBRAL_TSH_", extra="ignore")

    cache_size: int = Field(
        512,
        ge=1,
        description="Maximum entries kept in each partition/Stirling/Bell memo table",
    )


@lru_cache(maxsize=1)
def get_settings() -> UmbralSettings:
    """Return the process-wide settings, read once."""
    return UmbralSettings()
