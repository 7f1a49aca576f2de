"""Custom exceptions for Jacobson Lab."""

from typing import Any, Optional


class JacobsonLabError(Exception):
    """Base exception for all Jacobson Lab errors."""

    pass


class RingConstructionError(JacobsonLabError):
    """Invalid descriptor for a finite local ring."""

    def __init__(self, message: str, descriptor: Any = None):
        self.descriptor = descriptor
        super().__init__(message)


class RingArithmeticError(JacobsonLabError):
    """Arithmetic on an invalid code, or inversion of a non-unit."""

    def __init__(self, message: str, code: Optional[int] = None):
        self.code = code
        super().__init__(message)


class RingSpecError(JacobsonLabError):
    """Malformed ring specification text."""

    def __init__(self, message: str, text: str = "", offset: int = 0):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} (at byte {offset})")


class NotAVertexError(JacobsonLabError):
    """A radical element was used where a graph vertex is required."""

    def __init__(self, element: Any, message: str = ""):
        self.element = element
        super().__init__(f"{element} is not a vertex of the Jacobson graph. {message}".strip())


class SelfAdjacencyError(JacobsonLabError):
    """Adjacency was queried for a vertex against itself."""

    def __init__(self, element: Any):
        self.element = element
        super().__init__(f"adjacency is only defined for distinct vertices, got {element} twice")


class GraphSizeError(JacobsonLabError):
    """The graph would exceed the configured vertex limit."""

    def __init__(self, vertices: int, limit: int):
        self.vertices = vertices
        self.limit = limit
        super().__init__(f"Graph has {vertices} vertices, above the limit of {limit}")


class OracleLimitError(JacobsonLabError):
    """An exact search refused a graph above its vertex limit."""

    def __init__(self, vertices: int, limit: int, oracle: str = "search"):
        self.vertices = vertices
        self.limit = limit
        self.oracle = oracle
        super().__init__(f"{oracle} refuses {vertices} vertices (limit {limit})")


class ConstructionError(JacobsonLabError):
    """A construction is infeasible or produced an invalid walk."""

    def __init__(self, message: str, strategy: str | None = None):
        self.strategy = strategy
        if strategy:
            message = f"[{strategy}] {message}"
        super().__init__(message)


class ExportFormatError(JacobsonLabError):
    """Unknown graph export format."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        super().__init__(f"Unknown export format '{fmt}' (expected 'dot' or 'edges')")


class UnsupportedRingError(JacobsonLabError):
    """A ring outside an operation's domain, e.g. a local ring for a non-local formula."""

    def __init__(self, message: str, ring_label: str = ""):
        self.ring_label = ring_label
        super().__init__(f"{ring_label}: {message}" if ring_label else message)
