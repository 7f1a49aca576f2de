"""
Walks, search budgets and result types shared by the exact-search oracles.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from jacobson_lab.config import get_settings
from jacobson_lab.graph.jgraph import JacobsonGraph
from jacobson_lab.rings.product_ring import RingElement
from jacobson_lab.utils.exceptions import OracleLimitError


class WalkKind(str, Enum):
    """Shape of a walk."""

    CYCLE = "cycle"
    PATH = "path"
    TOUR = "tour"
    TRAIL = "trail"


@dataclass(frozen=True)
class Walk:
    """
    A vertex-id sequence.

    Cycles list each vertex once (the closing edge is implied). Tours repeat
    the start vertex at the end.
    """

    kind: WalkKind
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of edges traversed."""
        if self.kind is WalkKind.CYCLE:
            return len(self.vertices)
        return max(len(self.vertices) - 1, 0)

    def edges(self) -> List[Tuple[int, int]]:
        seq = list(self.vertices)
        if self.kind is WalkKind.CYCLE and seq:
            seq.append(seq[0])
        return [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]

    def elements(self, G: JacobsonGraph) -> List[RingElement]:
        return [G.vertices[v] for v in self.vertices]


@dataclass(frozen=True)
class WalkCheck:
    """Outcome of validate_walk; falsy when a violation was found."""

    ok: bool
    index: Optional[int] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _fail(index: int, message: str) -> WalkCheck:
    return WalkCheck(ok=False, index=index, message=message)


def validate_walk(
    G: JacobsonGraph,
    walk: Walk,
    spanning: bool = False,
    induced: bool = False,
) -> WalkCheck:
    """
    Check every invariant of a walk against the graph.

    Args:
        G: Graph the walk lives in
        walk: Walk to check
        spanning: Also require all vertices (cycle/path) or all edges (tour/trail)
        induced: Also require no chords (cycle/path)

    Returns:
        WalkCheck with the first violation's index and a diagnostic
    """
    seq = walk.vertices
    kind = walk.kind
    if not seq:
        return _fail(0, "empty walk")

    closed_repeat = kind is WalkKind.TOUR
    seen = set()
    used_edges = set()
    for i, v in enumerate(seq):
        if not 0 <= v < G.n:
            return _fail(i, f"vertex id {v} out of range")
        if kind in (WalkKind.CYCLE, WalkKind.PATH):
            if v in seen:
                return _fail(i, f"vertex {v} repeated")
            seen.add(v)
        if i > 0:
            u = seq[i - 1]
            if u == v or not G.has_edge(u, v):
                return _fail(i, f"vertices {u} and {v} are not adjacent")
            if kind in (WalkKind.TOUR, WalkKind.TRAIL):
                edge = (min(u, v), max(u, v))
                if edge in used_edges:
                    return _fail(i, f"edge {edge} used twice")
                used_edges.add(edge)

    if kind is WalkKind.CYCLE:
        if len(seq) < 3:
            return _fail(len(seq) - 1, "a cycle needs at least three vertices")
        if not G.has_edge(seq[-1], seq[0]):
            return _fail(len(seq) - 1, "endpoints not adjacent")
    if closed_repeat and seq[0] != seq[-1]:
        return _fail(len(seq) - 1, "tour does not return to its start")
    if kind is WalkKind.TRAIL and len(seq) < 2:
        return _fail(0, "a trail needs at least one edge")

    if spanning:
        if kind in (WalkKind.CYCLE, WalkKind.PATH):
            if len(seen) != G.n:
                missing = next(v for v in range(G.n) if v not in seen)
                return _fail(len(seq), f"vertex {missing} not visited")
        elif len(used_edges) != G.edge_count:
            return _fail(len(seq), f"{G.edge_count - len(used_edges)} edges not covered")

    if induced and kind in (WalkKind.CYCLE, WalkKind.PATH):
        k = len(seq)
        for i in range(k):
            for j in range(i + 2, k):
                if kind is WalkKind.CYCLE and i == 0 and j == k - 1:
                    continue
                if G.has_edge(seq[i], seq[j]):
                    return _fail(j, f"chord between {seq[i]} and {seq[j]}")

    return WalkCheck(ok=True)


class SearchStatus(str, Enum):
    """How a search ended."""

    FOUND = "found"
    PROVED_ABSENT = "proved_absent"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchResult:
    """Result of an exact search; walk is set iff status is FOUND."""

    status: SearchStatus
    walk: Optional[Walk] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


class SearchAborted(Exception):
    """Raised inside a search when its deadline passes."""


class Deadline:
    """Wall-clock budget polled from inside search loops."""

    CHECK_EVERY = 256

    def __init__(self, time_limit_ms: int):
        self.end = time.monotonic() + time_limit_ms / 1000.0
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes % self.CHECK_EVERY == 0 and time.monotonic() > self.end:
            raise SearchAborted()


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the NP-hard searches."""

    vertex_limit: int = 24
    time_limit_ms: int = 60000

    def __post_init__(self):
        if self.vertex_limit <= 0 or self.time_limit_ms <= 0:
            raise ValueError("search budget limits must be positive")

    @classmethod
    def from_settings(
        cls, vertex_limit: Optional[int] = None, time_limit_ms: Optional[int] = None
    ) -> "SearchBudget":
        """Budget from JLAB_ORACLE_* settings, with optional overrides."""
        oracle = get_settings().oracle
        return cls(
            vertex_limit=vertex_limit if vertex_limit is not None else oracle.vertex_limit,
            time_limit_ms=time_limit_ms if time_limit_ms is not None else oracle.time_limit_ms,
        )

    def guard(self, G: JacobsonGraph, oracle: str) -> None:
        """Refuse graphs above the vertex limit."""
        if G.n > self.vertex_limit:
            raise OracleLimitError(G.n, self.vertex_limit, oracle)

    def deadline(self) -> Deadline:
        return Deadline(self.time_limit_ms)


def iter_bits(mask: int) -> Iterator[int]:
    """Set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reachable(rows: Sequence[int], source_mask: int, within: int) -> int:
    """Vertices of `within` reachable from any vertex of source_mask through `within`."""
    seen = source_mask & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen
