"""Logger configuration shared by the CLI and the batch script."""
import os
import sys
from typing import Optional

from loguru import logger

from qhopf.utils.config import get_settings


def setup_logging(level: Optional[str] = None, log_dir: Optional[str] = None) -> None:
    """Route loguru output to stderr and, if configured, to a rotating file."""
    settings = get_settings()
    level = (level or settings.log_level).upper()
    log_dir = log_dir if log_dir is not None else settings.log_dir

    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> | {name}:{line} - {message}")
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        logger.add(os.path.join(log_dir, "qhopf.log"), level="DEBUG", rotation="10 MB")
    logger.debug(f"Logging configured (level={level}, log_dir={log_dir})")
