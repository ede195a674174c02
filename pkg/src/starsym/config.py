from __future__ import annotations

from pathlib import Path
from typing import Any

from environs import Env
from pydantic import BaseModel, ConfigDict, Field

from starsym.constant import (
    ENUMERATION_LIMIT_DEFAULT,
    ORACLE_MAX_GENERATORS_DEFAULT,
    ORACLE_MAX_M_DEFAULT,
    ORACLE_MAX_S_DEFAULT,
    PARTITION_LIMIT_DEFAULT,
    THREADS_DEFAULT,
)
from starsym.exc import ConfigurationError
from starsym.util.logger import set_logging
from starsym.util.orjson import from_json, to_json

env = Env(prefix="STARSYM_")
env.read_env()
SILENT = env.bool("SILENT", default=False)
DEBUG = env.bool("DEBUG", default=False)
LOG_FILE = env.path("LOG_FILE", default=None)
LIMIT = env.int("LIMIT", default=ENUMERATION_LIMIT_DEFAULT)
PARTITION_LIMIT = env.int("PARTITION_LIMIT", default=PARTITION_LIMIT_DEFAULT)
THREADS = env.int("THREADS", default=THREADS_DEFAULT)
ORACLE_MAX_S = env.int("ORACLE_MAX_S", default=ORACLE_MAX_S_DEFAULT)
ORACLE_MAX_M = env.int("ORACLE_MAX_M", default=ORACLE_MAX_M_DEFAULT)
ORACLE_MAX_GENERATORS = env.int(
    "ORACLE_MAX_GENERATORS", default=ORACLE_MAX_GENERATORS_DEFAULT
)


class OracleLimits(BaseModel):
    """Caps on the brute-force ideal engine."""

    model_config = ConfigDict(frozen=True)

    max_s: int = Field(default=ORACLE_MAX_S, ge=2)
    max_m: int = Field(default=ORACLE_MAX_M, ge=1)
    max_generators: int = Field(default=ORACLE_MAX_GENERATORS, ge=1)


class Config(BaseModel):
    limit: int = Field(default=LIMIT)
    partition_limit: int = Field(default=PARTITION_LIMIT)
    threads: int = Field(default=THREADS)
    oracle: OracleLimits = Field(default_factory=OracleLimits)

    silent: bool = Field(default=SILENT, exclude=True)
    debug: bool = Field(default=DEBUG, exclude=True)
    log_file: Path | str | None = Field(default=LOG_FILE, exclude=True)

    def model_post_init(self, context: Any, /) -> None:
        for name in ("limit", "partition_limit", "threads"):
            if getattr(self, name) < 1:
                raise ConfigurationError(
                    f"{name} must be a positive integer, got {getattr(self, name)}"
                )
        if self.log_file:
            self.log_file = Path(self.log_file).absolute()
            self.log_file.parent.mkdir(exist_ok=True, parents=True)
        set_logging(self.silent, self.debug, self.log_file)
        super().model_post_init(context)

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump()

    def to_json(self) -> str:
        return to_json(self.model_dump()).decode("utf-8")

    @classmethod
    def from_json(cls, data: str | dict) -> Config:
        if isinstance(data, str):
            data = from_json(data)
        return cls.model_validate(data)
