"""
Service configuration
"""
import logging
from typing import Any

from pydantic import ConfigDict, field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    APP_HOST: str = "127.0.0.1"
    APP_PORT: int = 8000
    LOG_LEVEL: str = "INFO"
    MAX_SOURCE_LENGTH: int = 1_000_000
    DEFAULT_MAX_DISTANCE: float = 1.5

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, val: Any):
        val = str(val).upper()
        # logging.getLevelNamesMapping() is 3.11+; _nameToLevel is the same mapping
        names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()
        if val not in names:
            raise ValueError("LOG_LEVEL must be a logging level name")
        return val

    model_config = ConfigDict(extra="ignore", env_file=".env", env_file_encoding="utf-8")  # noqa


config = Settings()
