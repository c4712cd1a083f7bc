"""
Runtime settings for drinpoly
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Library and CLI settings, read from DRINPOLY_* variables and .env"""

    linalg_strategy: Literal["division_free", "interpolation"] = "division_free"
    csa_strategy: Literal["division_free", "interpolation"] = "interpolation"
    workers: int = Field(default=1, ge=1)
    seed: int = 0
    oracle_budget: int = Field(default=100_000, ge=1)
    check_bounds: bool = False
    audit_dir: str | None = None
    bench_reps: int = Field(default=3, ge=1)

    class Config:
        env_prefix = "DRINPOLY_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


_settings: Settings | None = None


def get_settings() -> Settings:
    """Cached settings instance"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None
