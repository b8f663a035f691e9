"""Logging setup shared by the library and the CLI.

Diagnostics always go to stderr; stdout is reserved for output records.
"""

import logging
import sys

from src.spectral.errors import ConfigurationError
from src.utils.config import config

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _resolve_level(level: str) -> int:
    name = level.upper()
    if name not in LEVELS:
        raise ConfigurationError(f"LOG_LEVEL must be one of {', '.join(LEVELS)}, got {name!r}")
    return getattr(logging, name)


def configured_level() -> int:
    """Level named by LOG_LEVEL.

    Raises:
        ConfigurationError: If the level name is unknown
    """
    return _resolve_level(config.log_level)


def setup_logger(
    name: str,
    level: str | None = None,
    format_string: str | None = None,
) -> logging.Logger:
    """Set up a named logger with a single stderr handler.

    Args:
        name: Logger name (usually __name__)
        level: Log level name; defaults to LOG_LEVEL, or INFO while LOG_LEVEL
            is unknown (the CLI reports that through configured_level)
        format_string: Custom format string for log messages

    Returns:
        Configured logger instance

    Raises:
        ConfigurationError: If an explicit level name is unknown
    """
    logger = logging.getLogger(name)
    if level is not None:
        log_level = _resolve_level(level)
    else:
        try:
            log_level = configured_level()
        except ConfigurationError:
            log_level = logging.INFO
    logger.setLevel(log_level)

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    formatter = logging.Formatter(format_string or LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    return logger


def get_logger(name: str) -> logging.Logger:
    """Get or create a logger with the default configuration."""
    return setup_logger(name)
