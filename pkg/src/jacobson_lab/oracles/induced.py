"""
Longest induced cycle and path search.

Both searches grow a chordless path while maintaining a `blocked` bitset:
the path itself plus the closed neighbourhoods of every vertex that can no
longer be an endpoint. For cycles the start vertex is the smallest member,
so only larger vertices are in scope, and a candidate adjacent to the start
closes the cycle. Branches that cannot beat the incumbent are cut using
path length plus the number of unblocked vertices left.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional

from jacobson_lab.config import get_settings
from jacobson_lab.graph.jgraph import JacobsonGraph
from jacobson_lab.graph.lengths import NO_CYCLE, LengthValue
from jacobson_lab.oracles.walks import (
    Deadline,
    SearchAborted,
    SearchBudget,
    SearchStatus,
    Walk,
    WalkKind,
    iter_bits,
    reachable,
)
from jacobson_lab.utils import get_logger, log_search
from jacobson_lab.utils.exceptions import OracleLimitError

logger = get_logger(__name__)


@dataclass(frozen=True)
class InducedResult:
    """
    Longest induced cycle or path.

    When the budget runs out the status is BUDGET_EXCEEDED and length is the
    best found so far (a lower bound).
    """

    status: SearchStatus
    length: LengthValue
    walk: Optional[Walk] = None


class _InducedSearch:
    def __init__(self, G: JacobsonGraph, deadline: Deadline, closed: bool):
        self.rows = G.rows
        self.n = G.n
        self.full = G.all_mask
        self.deadline = deadline
        self.closed = closed
        self.best = -1
        self.best_walk: Optional[List[int]] = None

    def _record(self, length: int, vertices: List[int]) -> None:
        if length > self.best:
            self.best = length
            self.best_walk = vertices

    def grow(self, path: List[int], blocked: int, scope: int) -> None:
        self.deadline.tick()
        rows = self.rows
        last = path[-1]
        candidates = rows[last] & scope & ~blocked

        if self.closed:
            if len(path) >= 2:
                closers = candidates & rows[path[0]]
                if closers and len(path) + 1 > self.best:
                    low = closers & -closers
                    self._record(len(path) + 1, path + [low.bit_length() - 1])
                candidates &= ~rows[path[0]]
            if len(path) + (scope & ~blocked).bit_count() <= self.best:
                return
        else:
            self._record(len(path) - 1, list(path))
            if len(path) - 1 + (scope & ~blocked).bit_count() <= self.best:
                return

        # leaving the start of a cycle keeps its neighbourhood open for closing
        keep_open = self.closed and len(path) == 1
        extra = 0 if keep_open else rows[last]
        for w in iter_bits(candidates):
            self.grow(path + [w], blocked | extra | (1 << w), scope)

    def run(self) -> None:
        for s in range(self.n):
            if self.closed:
                scope = self.full & ~((1 << (s + 1)) - 1)
                if scope.bit_count() + 1 <= self.best:
                    break
            else:
                scope = self.full
                if self.best >= self.n - 1:
                    break
            self.grow([s], 1 << s, scope)


def _longest(G: JacobsonGraph, budget: Optional[SearchBudget], closed: bool) -> InducedResult:
    name = "longest_induced_cycle" if closed else "longest_induced_path"
    budget = budget or SearchBudget.from_settings()
    budget.guard(G, name)
    deadline = budget.deadline()
    search = _InducedSearch(G, deadline, closed)
    status = SearchStatus.FOUND
    try:
        with log_search(logger, name, G.n, deadline):
            search.run()
    except SearchAborted:
        logger.warning(f"{name} on {G.n} vertices hit the time budget")
        status = SearchStatus.BUDGET_EXCEEDED

    if search.best_walk is None:
        if status is SearchStatus.FOUND:
            status = SearchStatus.PROVED_ABSENT
        return InducedResult(status, NO_CYCLE)
    kind = WalkKind.CYCLE if closed else WalkKind.PATH
    return InducedResult(status, LengthValue(search.best), Walk(kind, tuple(search.best_walk)))


def longest_induced_cycle(
    G: JacobsonGraph, budget: Optional[SearchBudget] = None
) -> InducedResult:
    """
    Exact longest induced (chordless) cycle.

    Returns:
        InducedResult with length NoCycle when G is a forest

    Raises:
        OracleLimitError: If G has more vertices than the budget allows
    """
    return _longest(G, budget, closed=True)


def longest_induced_path(G: JacobsonGraph, budget: Optional[SearchBudget] = None) -> InducedResult:
    """Exact longest induced path, measured in edges (0 for a single vertex)."""
    return _longest(G, budget, closed=False)


@dataclass(frozen=True)
class BruteForceLengths:
    cycle: LengthValue
    path: LengthValue


def brute_force_induced(G: JacobsonGraph, vertex_limit: Optional[int] = None) -> BruteForceLengths:
    """
    Longest induced cycle and path by enumerating every vertex subset.

    A subset induces a cycle when it is connected with all inner degrees 2,
    and a path when it is connected with |S| - 1 edges and degrees at most 2.

    Raises:
        OracleLimitError: Above the brute-force vertex limit
    """
    if vertex_limit is None:
        vertex_limit = get_settings().oracle.brute_force_vertex_limit
    if G.n > vertex_limit:
        raise OracleLimitError(G.n, vertex_limit, "brute_force_induced")

    rows = G.rows
    best_cycle: Optional[int] = None
    best_path = 0 if G.n else -1
    for size in range(G.n, 1, -1):
        if best_cycle is not None and best_path >= size - 1:
            break
        for subset in combinations(range(G.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            degrees = [(rows[v] & mask).bit_count() for v in subset]
            if max(degrees) > 2:
                continue
            if reachable(rows, 1 << subset[0], mask) != mask:
                continue
            if best_cycle is None and size >= 3 and all(d == 2 for d in degrees):
                best_cycle = size
            if sum(degrees) == 2 * (size - 1) and size - 1 > best_path:
                best_path = size - 1
    return BruteForceLengths(
        cycle=NO_CYCLE if best_cycle is None else LengthValue(best_cycle),
        path=LengthValue(best_path),
    )
