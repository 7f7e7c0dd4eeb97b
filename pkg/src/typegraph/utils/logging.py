"""Logging configuration for typegraph."""
from __future__ import annotations

import os
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

from loguru import logger

FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}"


def setup_logging(debug: bool = False, log_dir: Path | None = None, level: str = "WARNING") -> None:
    """Configure loguru sinks.

    Args:
        debug: Enable verbose console logging
        log_dir: Directory for rotating log files; no files are written when None
        level: Console level used when debug is off
    """
    logger.remove()

    console_format = (
        "<green>{time:HH:mm:ss.SSS}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - "
        "<level>{message}</level>"
    )
    logger.add(
        sys.stderr,
        format=console_format,
        level="DEBUG" if debug else level,
        colorize=True,
        backtrace=debug,
        diagnose=debug,
    )

    if log_dir is None:
        return

    log_dir.mkdir(parents=True, exist_ok=True)

    logger.add(
        log_dir / "typegraph.log",
        format=FILE_FORMAT,
        level="DEBUG" if debug else "INFO",
        rotation="10 MB",
        retention="30 days",
        compression="zip",
    )

    # Timing lines only
    logger.add(
        log_dir / "performance.log",
        format=FILE_FORMAT,
        level="DEBUG",
        rotation="5 MB",
        retention="7 days",
        compression="zip",
        filter=lambda record: "executed in" in record["message"].lower(),
    )

    logger.add(
        log_dir / "errors.log",
        format=FILE_FORMAT,
        level="WARNING",
        rotation="5 MB",
        retention="30 days",
        compression="zip",
        backtrace=True,
        diagnose=True,
    )
    logger.debug(f"Log files will be written to: {log_dir.absolute()}")


def get_debug_mode() -> bool:
    """Get debug mode from environment or settings."""
    if os.getenv("TYPEGRAPH_DEBUG", "").lower() in ("1", "true", "yes", "on"):
        return True

    from typegraph.utils.settings import get_settings

    return get_settings().debug


def configure_app_logging(debug: bool | None = None, log_dir: Path | None = None) -> None:
    """Configure logging from settings, with optional CLI overrides."""
    from typegraph.utils.settings import get_settings

    settings = get_settings()
    if debug is None:
        debug = get_debug_mode()
    setup_logging(debug=debug, log_dir=log_dir or settings.log_dir, level=settings.log_level)
    if debug:
        logger.info("Debug logging enabled")


@contextmanager
def timed(what: str) -> Iterator[None]:
    """Log '<what> executed in <ms> ms' at DEBUG level when the block exits."""
    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed = (time.perf_counter() - start) * 1000
        logger.debug(f"{what} executed in {elapsed:.1f} ms")
