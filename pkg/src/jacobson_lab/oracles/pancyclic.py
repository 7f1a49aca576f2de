"""
Cycles of prescribed length and the pancyclicity oracle.

Shorter cycles are first derived from a Hamiltonian cycle: drop a vertex
whose two cycle neighbours are adjacent, or cut along a chord. Lengths that
remain uncovered fall back to an exhaustive search.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from jacobson_lab.graph.jgraph import JacobsonGraph
from jacobson_lab.oracles.hamiltonian import hamiltonian_cycle
from jacobson_lab.oracles.walks import (
    Deadline,
    SearchAborted,
    SearchBudget,
    SearchResult,
    SearchStatus,
    Walk,
    WalkKind,
    iter_bits,
)
from jacobson_lab.utils import get_logger

logger = get_logger(__name__)


def _search_length(G: JacobsonGraph, length: int, deadline: Deadline) -> Optional[Tuple[int, ...]]:
    """Iterative DFS for a cycle whose smallest vertex is its start."""
    rows = G.rows
    for s in range(G.n):
        scope = G.all_mask & ~((1 << (s + 1)) - 1)
        if scope.bit_count() + 1 < length:
            break
        path = [s]
        visited = 1 << s
        stack = [iter_bits(rows[s] & scope)]
        while stack:
            deadline.tick()
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                visited &= ~(1 << path.pop())
                continue
            if visited >> w & 1:
                continue
            if len(path) + 1 == length:
                if rows[w] >> s & 1:
                    return tuple(path) + (w,)
                continue
            path.append(w)
            visited |= 1 << w
            stack.append(iter_bits(rows[w] & scope & ~visited))
    return None


def cycle_of_length(
    G: JacobsonGraph,
    length: int,
    budget: Optional[SearchBudget] = None,
    deadline: Optional[Deadline] = None,
) -> SearchResult:
    """
    Find a cycle with exactly `length` edges.

    Args:
        G: Graph to search
        length: Cycle length, at least 3
        budget: Time limit source when no deadline is given
        deadline: Shared deadline of an enclosing search

    Returns:
        SearchResult with a CYCLE walk, PROVED_ABSENT, or BUDGET_EXCEEDED
    """
    if length < 3 or length > G.n:
        return SearchResult(SearchStatus.PROVED_ABSENT)
    if deadline is None:
        deadline = (budget or SearchBudget.from_settings()).deadline()
    try:
        found = _search_length(G, length, deadline)
    except SearchAborted:
        return SearchResult(SearchStatus.BUDGET_EXCEEDED, nodes=deadline.nodes)
    if found is None:
        return SearchResult(SearchStatus.PROVED_ABSENT, nodes=deadline.nodes)
    return SearchResult(SearchStatus.FOUND, Walk(WalkKind.CYCLE, found), nodes=deadline.nodes)


def shorter_cycles(G: JacobsonGraph, cycle: Sequence[int]) -> Dict[int, Tuple[int, ...]]:
    """
    Derive cycles of smaller lengths from one cycle.

    Repeatedly delete a vertex whose cycle neighbours are adjacent (length
    drops by one); when none exists, cut along the chord that keeps the
    longest shorter cycle.

    Returns:
        Length -> cycle (vertex ids, closing edge implied), including the input
    """
    rows = G.rows
    current = list(cycle)
    found = {len(current): tuple(current)}
    while len(current) > 3:
        size = len(current)
        for i in range(size):
            if rows[current[i - 1]] >> current[(i + 1) % size] & 1:
                current = current[:i] + current[i + 1 :]
                break
        else:
            best: Optional[List[int]] = None
            for i in range(size):
                for j in range(i + 2, size):
                    if i == 0 and j == size - 1:
                        continue
                    if not rows[current[i]] >> current[j] & 1:
                        continue
                    inner = current[i : j + 1]
                    outer = current[j:] + current[: i + 1]
                    for arc in (inner, outer):
                        if best is None or len(arc) > len(best):
                            best = arc
            if best is None:
                break
            current = best
        found.setdefault(len(current), tuple(current))
    return found


@dataclass(frozen=True)
class PancyclicResult:
    """Pancyclicity verdict with one witness cycle per covered length."""

    status: SearchStatus
    is_pancyclic: bool
    witnesses: Dict[int, Walk] = field(default_factory=dict)
    missing: List[int] = field(default_factory=list)


def pancyclic_check(G: JacobsonGraph, budget: Optional[SearchBudget] = None) -> PancyclicResult:
    """
    Decide whether G has a cycle of every length from 3 to |V|.

    Raises:
        OracleLimitError: If G has more vertices than the budget allows
    """
    budget = budget or SearchBudget.from_settings()
    budget.guard(G, "pancyclic")
    if G.n < 3:
        return PancyclicResult(SearchStatus.PROVED_ABSENT, False, missing=list(range(3, G.n + 1)))

    ham = hamiltonian_cycle(G, budget)
    if ham.status is SearchStatus.BUDGET_EXCEEDED:
        return PancyclicResult(SearchStatus.BUDGET_EXCEEDED, False)
    if not ham.found:
        return PancyclicResult(SearchStatus.PROVED_ABSENT, False, missing=[G.n])

    witnesses = {
        k: Walk(WalkKind.CYCLE, c) for k, c in shorter_cycles(G, ham.walk.vertices).items()
    }
    deadline = budget.deadline()
    for length in range(3, G.n + 1):
        if length in witnesses:
            continue
        result = cycle_of_length(G, length, deadline=deadline)
        if result.status is SearchStatus.BUDGET_EXCEEDED:
            return PancyclicResult(SearchStatus.BUDGET_EXCEEDED, False, witnesses)
        if not result.found:
            logger.debug(f"No cycle of length {length} on {G.n} vertices")
            return PancyclicResult(SearchStatus.PROVED_ABSENT, False, witnesses, [length])
        witnesses[length] = result.walk
    return PancyclicResult(SearchStatus.FOUND, True, dict(sorted(witnesses.items())))
