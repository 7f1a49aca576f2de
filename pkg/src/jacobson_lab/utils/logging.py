"""Unified logging configuration for Jacobson Lab."""

import logging
import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional

PACKAGE_LOGGER = "jacobson_lab"


def setup_logging(
    level: str = "INFO",
    log_file: Optional[Path] = None,
    format_string: Optional[str] = None,
) -> logging.Logger:
    """
    Configure logging for the Jacobson Lab package.

    Console output goes to stderr; stdout is reserved for JSON, CSV and DOT.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path to log file
        format_string: Optional custom format string

    Returns:
        The package logger
    """
    if format_string is None:
        format_string = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(getattr(logging, level.upper()))
    logger.handlers.clear()

    formatter = logging.Formatter(format_string, datefmt="%Y-%m-%d %H:%M:%S")
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    for handler in handlers:
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger for a specific module.

    Args:
        name: Module name (e.g., "jacobson_lab.oracles.hamiltonian")

    Returns:
        Logger instance
    """
    return logging.getLogger(name)


@contextmanager
def log_search(logger: logging.Logger, name: str, vertices: int, deadline: Any) -> Iterator[None]:
    """
    Log one exact search's node count and wall time at DEBUG when it ends.

    Args:
        logger: Module logger
        name: Oracle name
        vertices: Graph size
        deadline: The search's Deadline; its `nodes` counter is read on exit
    """
    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        logger.debug(f"{name} on {vertices} vertices: {deadline.nodes} nodes, {elapsed_ms:.1f} ms")
