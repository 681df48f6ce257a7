"""
Logging utilities for Centrex.

Log records go to stderr (and optionally a file) so stdout carries only
command output.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

from centrex.config.settings import settings

ROOT_LOGGER = "centrex"
LEVEL_NAMES = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class LogFormatter(logging.Formatter):
    """Custom formatter for logs with color support."""

    # ANSI color codes
    COLORS = {
        "DEBUG": "\033[36m",  # Cyan
        "INFO": "\033[32m",  # Green
        "WARNING": "\033[33m",  # Yellow
        "ERROR": "\033[31m",  # Red
        "CRITICAL": "\033[35m",  # Magenta
        "RESET": "\033[0m",
    }

    def __init__(self, use_colors: bool = True):
        """
        Initialize the formatter.

        Args:
            use_colors (bool): Whether to use colors in the output.
        """
        super().__init__(
            fmt="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        self.use_colors = use_colors

    def format(self, record: logging.LogRecord) -> str:
        original_levelname = record.levelname
        if self.use_colors and record.levelname in self.COLORS:
            record.levelname = (
                f"{self.COLORS[record.levelname]}"
                f"{record.levelname}{self.COLORS['RESET']}"
            )
        result = super().format(record)
        record.levelname = original_levelname
        return result


def _stream_supports_colors(stream) -> bool:
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


def setup_logging(
    log_level: str = "INFO",
    log_file: Optional[Union[str, Path]] = None,
    use_colors: bool = True,
) -> logging.Logger:
    """
    Set up the logging system.

    Args:
        log_level (str): Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        log_file (Optional[Union[str, Path]]): Path to log file.
        use_colors (bool): Whether to use colors in console output.

    Returns:
        logging.Logger: Configured package logger.
    """
    logger = logging.getLogger(ROOT_LOGGER)

    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
        handler.close()

    requested = (log_level or "INFO").upper()
    if requested not in LEVEL_NAMES:
        requested = "INFO"
    numeric_level = logging.getLevelName(requested)
    logger.setLevel(numeric_level)
    logger.propagate = False

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(
        LogFormatter(use_colors=use_colors and _stream_supports_colors(sys.stderr))
    )
    logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path, encoding="utf-8")
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(LogFormatter(use_colors=False))
        logger.addHandler(file_handler)

    logger.debug("Logging initialized at level %s", requested)
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name (str): Logger name, relative to the base package.

    Returns:
        logging.Logger: Logger instance.
    """
    if name:
        return logging.getLogger(f"{ROOT_LOGGER}.{name}")
    return logging.getLogger(ROOT_LOGGER)


def initialize_logging(debug: bool = False, default_level: str = "WARNING") -> logging.Logger:
    """
    Initialize logging from the ``advanced`` settings section.

    Args:
        debug (bool): Force DEBUG regardless of the configured level.
        default_level (str): Level used when ``advanced.log_level`` is unset.

    Returns:
        logging.Logger: Configured logger.
    """
    debug = debug or bool(settings.get("advanced", "debug_mode", False))
    configured_level = "DEBUG" if debug else settings.get("advanced", "log_level", default_level)
    return setup_logging(
        log_level=configured_level,
        log_file=settings.get_log_file_path(),
        use_colors=True,
    )
