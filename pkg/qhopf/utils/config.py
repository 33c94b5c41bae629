"""Settings loaded from the environment (and an optional .env file)."""
import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

load_dotenv()


class Settings(BaseModel):
    log_level: str = "INFO"
    log_dir: Optional[str] = None
    default_field: str = "q"
    seed: int = 0
    samples: int = Field(default=20, ge=1)
    max_module_dim: int = Field(default=3, ge=1)
    normalize: bool = False
    report_dir: str = "reports"

    @field_validator("log_level")
    @classmethod
    def _upper(cls, value: str) -> str:
        return value.upper()

    @field_validator("log_dir")
    @classmethod
    def _empty_is_none(cls, value: Optional[str]) -> Optional[str]:
        return value or None


def _env_bool(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings object."""
    return Settings(
        log_level=os.getenv("QHOPF_LOG_LEVEL", "INFO"),
        log_dir=os.getenv("QHOPF_LOG_DIR", ""),
        default_field=os.getenv("QHOPF_DEFAULT_FIELD", "q"),
        seed=int(os.getenv("QHOPF_SEED", "0")),
        samples=int(os.getenv("QHOPF_SAMPLES", "20")),
        max_module_dim=int(os.getenv("QHOPF_MAX_MODULE_DIM", "3")),
        normalize=_env_bool("QHOPF_NORMALIZE"),
        report_dir=os.getenv("QHOPF_REPORT_DIR", "reports"),
    )
