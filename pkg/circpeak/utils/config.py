import os
from contextlib import contextmanager
from typing import Any, Iterator

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from circpeak.exceptions import PreconditionViolation

# Above this the oracle scan of S_n runs for minutes.
ORACLE_HARD_CAP = 12
DP_HARD_CAP = 24
GENFUNC_HARD_CAP = 20

ENV_PREFIX = "CIRCPEAK_"


class Settings(BaseModel):
    """Limits and runtime knobs shared by every counting route."""

    model_config = ConfigDict(frozen=True)

    oracle_limit: int = Field(default=9, ge=3, le=ORACLE_HARD_CAP, description="Largest n the brute-force oracle accepts")
    dp_limit: int = Field(default=20, ge=14, le=DP_HARD_CAP, description="Largest n the subset DP accepts")
    genfunc_limit: int = Field(default=14, ge=3, le=GENFUNC_HARD_CAP, description="Largest n the genfunc engine accepts")
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1, description="Worker processes for the oracle")
    cache_dir: str = Field(default="/tmp/circpeak_cache", description="Directory of the on-disk table cache")
    disable_cache: bool = Field(default=False, description="Skip the on-disk table cache entirely")

    @classmethod
    def from_env(cls) -> "Settings":
        values: dict[str, Any] = {}
        for name in cls.model_fields:
            raw = os.getenv(ENV_PREFIX + name.upper())
            if raw is not None and raw.strip():
                values[name] = raw.strip()
        return build_settings(values)


def build_settings(values: dict[str, Any]) -> Settings:
    try:
        return Settings.model_validate(values)
    except ValidationError as e:
        raise PreconditionViolation(str(e), value=values, message="Invalid circpeak settings.") from e


_settings: Settings | None = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
        logger.debug(f"Loaded settings: {_settings!r}")
    return _settings


@contextmanager
def override_settings(**changes: Any) -> Iterator[Settings]:
    """Temporarily replace fields of the process-wide settings."""
    global _settings
    previous = get_settings()
    _settings = build_settings({**previous.model_dump(), **changes})
    try:
        yield _settings
    finally:
        _settings = previous
