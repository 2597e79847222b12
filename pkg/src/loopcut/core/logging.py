"""Logging configuration for loopcut.

Structured logging on standard error; standard output is reserved for reports.
"""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any, Optional

import structlog

_SHARED_PROCESSORS: tuple[Any, ...] = (
    structlog.stdlib.filter_by_level,
    structlog.stdlib.add_logger_name,
    structlog.stdlib.add_log_level,
    structlog.processors.TimeStamper(fmt="iso"),
    structlog.processors.StackInfoRenderer(),
    structlog.processors.format_exc_info,
)


def _renderer(format_json: bool, colors: bool) -> Any:
    if format_json:
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=colors)


def configure_logging(
    level: str = "INFO",
    format_json: bool = False,
    enable_colors: bool = False,
) -> None:
    """Route structlog through stdlib logging on stderr.

    Safe to call repeatedly; the last call wins.

    Args:
        level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        format_json: One JSON object per line instead of console rendering
        enable_colors: Colored console output (ignored for JSON)
    """
    structlog.configure(
        processors=[*_SHARED_PROCESSORS, _renderer(format_json, enable_colors)],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format="%(message)s",
        stream=sys.stderr,
        force=True,
    )


def get_logger(name: Optional[str] = None) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name or "loopcut")


class ContextLogger:
    """Logger that stamps a fixed context onto every entry.

    Used to tag all lines of one solver run or one experiment instance.
    """

    def __init__(self, logger_name: str, **context: Any) -> None:
        self.logger_name = logger_name
        self.logger = structlog.get_logger(logger_name)
        self.context = context

    def bind(self, **additional_context: Any) -> ContextLogger:
        return ContextLogger(self.logger_name, **{**self.context, **additional_context})

    def _emit(self, level: str, message: str, fields: dict[str, Any]) -> None:
        getattr(self.logger, level)(message, **{**self.context, **fields})

    def debug(self, message: str, **fields: Any) -> None:
        self._emit("debug", message, fields)

    def info(self, message: str, **fields: Any) -> None:
        self._emit("info", message, fields)

    def warning(self, message: str, **fields: Any) -> None:
        self._emit("warning", message, fields)

    def error(self, message: str, **fields: Any) -> None:
        self._emit("error", message, fields)


@contextmanager
def timed(log: ContextLogger, message: str, **fields: Any) -> Iterator[dict[str, Any]]:
    """Log ``message`` at debug level with ``millis`` when the block completes.

    The yielded dict is merged into the entry, so the block can add results.
    """
    extra: dict[str, Any] = {}
    start = time.perf_counter()
    yield extra
    log.debug(message, millis=round((time.perf_counter() - start) * 1000.0, 3), **fields, **extra)
