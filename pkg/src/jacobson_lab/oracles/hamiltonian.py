"""
Exact Hamiltonian cycle and path search.

Depth-first search over bitset rows with a failure memo keyed on
(current vertex, visited set). Candidates are tried in ascending order of
remaining degree, then id, so results are deterministic.
"""

from typing import List, Optional, Set, Tuple

from jacobson_lab.graph.jgraph import JacobsonGraph
from jacobson_lab.oracles.walks import (
    Deadline,
    SearchAborted,
    SearchBudget,
    SearchResult,
    SearchStatus,
    Walk,
    WalkKind,
    iter_bits,
    reachable,
)
from jacobson_lab.utils import get_logger, log_search

logger = get_logger(__name__)


def has_cut_vertex(G: JacobsonGraph) -> bool:
    """True if deleting some vertex disconnects a connected graph."""
    full = G.all_mask
    for v in range(G.n):
        rest = full & ~(1 << v)
        if not rest:
            continue
        low = rest & -rest
        if reachable(G.rows, low, rest) != rest:
            return True
    return False


class _HamiltonSearch:
    """Shared DFS state for the cycle and path searches."""

    def __init__(self, G: JacobsonGraph, deadline: Deadline):
        self.rows = G.rows
        self.full = G.all_mask
        self.deadline = deadline
        self.dead: Set[Tuple[int, int]] = set()
        self.path: List[int] = []

    def _order(self, candidates: int, remaining: int) -> List[int]:
        return sorted(iter_bits(candidates), key=lambda w: ((self.rows[w] & remaining).bit_count(), w))

    def _feasible(self, cur: int, remaining: int, start: Optional[int]) -> bool:
        rows = self.rows
        if reachable(rows, rows[cur] & remaining, remaining) != remaining:
            return False
        ends = 1 << cur
        if start is not None:
            ends |= 1 << start
        loose = 0
        for w in iter_bits(remaining):
            free = (rows[w] & (remaining | ends)).bit_count()
            if start is not None:
                if free < 2:
                    return False
            elif free == 0:
                return False
            elif free == 1:
                loose += 1
                if loose > 1:
                    return False
        return True

    def extend(self, cur: int, visited: int, start: Optional[int]) -> bool:
        """Extend self.path from cur; start is set when the walk must close."""
        self.deadline.tick()
        if visited == self.full:
            return start is None or bool(self.rows[cur] >> start & 1)
        key = (cur, visited)
        if key in self.dead:
            return False
        remaining = self.full & ~visited
        if self._feasible(cur, remaining, start):
            for w in self._order(self.rows[cur] & remaining, remaining):
                self.path.append(w)
                if self.extend(w, visited | (1 << w), start):
                    return True
                self.path.pop()
        self.dead.add(key)
        return False


def _is_connected(G: JacobsonGraph) -> bool:
    return reachable(G.rows, 1, G.all_mask) == G.all_mask


def hamiltonian_cycle(G: JacobsonGraph, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Find a Hamiltonian cycle or prove that none exists.

    Args:
        G: Graph to search
        budget: Vertex and time limits (defaults to settings)

    Returns:
        SearchResult; the walk starts at vertex 0

    Raises:
        OracleLimitError: If G has more vertices than the budget allows
    """
    budget = budget or SearchBudget.from_settings()
    budget.guard(G, "hamiltonian_cycle")
    absent = SearchResult(SearchStatus.PROVED_ABSENT)

    if G.n < 3 or any(r.bit_count() < 2 for r in G.rows):
        return absent
    if not _is_connected(G) or has_cut_vertex(G):
        return absent

    deadline = budget.deadline()
    search = _HamiltonSearch(G, deadline)
    search.path = [0]
    try:
        with log_search(logger, "hamiltonian_cycle", G.n, deadline):
            found = search.extend(0, 1, start=0)
    except SearchAborted:
        logger.warning(f"Hamiltonian cycle search on {G.n} vertices hit the time budget")
        return SearchResult(SearchStatus.BUDGET_EXCEEDED, nodes=deadline.nodes)
    if not found:
        return SearchResult(SearchStatus.PROVED_ABSENT, nodes=deadline.nodes)
    return SearchResult(
        SearchStatus.FOUND, Walk(WalkKind.CYCLE, tuple(search.path)), nodes=deadline.nodes
    )


def hamiltonian_path(G: JacobsonGraph, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Find a Hamiltonian path or prove that none exists.

    A single vertex has no path with an edge, so graphs with fewer than two
    vertices report PROVED_ABSENT.

    Raises:
        OracleLimitError: If G has more vertices than the budget allows
    """
    budget = budget or SearchBudget.from_settings()
    budget.guard(G, "hamiltonian_path")
    absent = SearchResult(SearchStatus.PROVED_ABSENT)

    if G.n < 2 or not _is_connected(G):
        return absent
    leaves = [v for v in range(G.n) if G.rows[v].bit_count() == 1]
    if len(leaves) > 2:
        return absent
    starts = leaves if leaves else list(range(G.n))

    deadline = budget.deadline()
    search = _HamiltonSearch(G, deadline)
    try:
        with log_search(logger, "hamiltonian_path", G.n, deadline):
            for s in starts:
                search.path = [s]
                if search.extend(s, 1 << s, start=None):
                    return SearchResult(
                        SearchStatus.FOUND,
                        Walk(WalkKind.PATH, tuple(search.path)),
                        nodes=deadline.nodes,
                    )
    except SearchAborted:
        logger.warning(f"Hamiltonian path search on {G.n} vertices hit the time budget")
        return SearchResult(SearchStatus.BUDGET_EXCEEDED, nodes=deadline.nodes)
    return SearchResult(SearchStatus.PROVED_ABSENT, nodes=deadline.nodes)
