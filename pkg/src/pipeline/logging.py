"""Structured logging for graph enumeration runs."""

import json
import logging
from typing import Any, Optional

# Fields copied from `extra=` into the JSON payload when present
EXTRA_FIELDS = (
    "command",
    "n",
    "method",
    "suite",
    "max_degree",
    "classes",
    "elements",
    "duration_ms",
    "error_code",
    "exit_code",
)

logger = logging.getLogger("graphgf")
logger.setLevel(logging.INFO)
logger.propagate = False

# Remove default handlers
logger.handlers.clear()

# stderr only; stdout carries results
handler = logging.StreamHandler()


class JSONFormatter(logging.Formatter):
    """JSON formatter for structured logs."""

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for name in EXTRA_FIELDS:
            if hasattr(record, name):
                log_data[name] = getattr(record, name)

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_data)


handler.setFormatter(JSONFormatter())
logger.addHandler(handler)


def set_level(level: str) -> None:
    """
    Raises:
        ValueError: If level is not a known level name
    """
    logger.setLevel(level.upper())


def log_run(
    command: str,
    n: int,
    duration_ms: float,
    exit_code: int,
    method: Optional[str] = None,
    **kwargs: Any,
) -> None:
    """Log one finished CLI command with structured data."""
    extra = {
        "command": command,
        "n": n,
        "duration_ms": round(duration_ms, 2),
        "exit_code": exit_code,
    }
    if method:
        extra["method"] = method
    extra.update(kwargs)

    logger.info(f"{command} n={n} exit={exit_code}", extra=extra)


def log_error(
    message: str,
    error_code: str,
    command: Optional[str] = None,
    exc_info: Optional[BaseException] = None,
) -> None:
    """Log error with structured data."""
    extra = {"error_code": error_code}
    if command:
        extra["command"] = command

    logger.error(message, extra=extra, exc_info=exc_info)
