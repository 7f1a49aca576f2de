"""Utility modules for Jacobson Lab."""

from jacobson_lab.utils.exceptions import (
    JacobsonLabError,
    RingConstructionError,
    RingArithmeticError,
    RingSpecError,
    NotAVertexError,
    SelfAdjacencyError,
    GraphSizeError,
    OracleLimitError,
    ConstructionError,
    ExportFormatError,
    UnsupportedRingError,
)
from jacobson_lab.utils.logging import get_logger, log_search, setup_logging

__all__ = [
    "JacobsonLabError",
    "RingConstructionError",
    "RingArithmeticError",
    "RingSpecError",
    "NotAVertexError",
    "SelfAdjacencyError",
    "GraphSizeError",
    "OracleLimitError",
    "ConstructionError",
    "ExportFormatError",
    "UnsupportedRingError",
    "setup_logging",
    "get_logger",
    "log_search",
]
