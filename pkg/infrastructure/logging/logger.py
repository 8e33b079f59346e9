import logging
import sys
from typing import Optional

from core.config import get_settings

LEVEL_NAMES = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_configured = False


def resolve_level(name: Optional[str]) -> int:
    """Numeric level for a level name; unknown names fall back to INFO."""
    if not name:
        return logging.INFO
    level = logging.getLevelName(name.strip().upper())
    return level if isinstance(level, int) else logging.INFO


def setup_logging(level: Optional[str] = None) -> int:
    """
    Installs the stderr handler once (stdout carries reports) and sets the root level.
    `level` overrides LOG_LEVEL; calling again only changes the level.
    """
    global _configured
    settings = get_settings()
    log_level = resolve_level(level or settings.LOG_LEVEL)
    root = logging.getLogger()
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(settings.LOG_FORMAT, datefmt=settings.LOG_DATE_FORMAT))
        root.addHandler(handler)
        _configured = True
    root.setLevel(log_level)
    logging.getLogger(__name__).debug(f"Logging level set to {logging.getLevelName(log_level)}")
    return log_level


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
