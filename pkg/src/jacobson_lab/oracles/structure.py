"""Polynomial-time structural oracles: components, girth and diameter."""

from collections import deque
from typing import List, Optional

from jacobson_lab.graph.jgraph import JacobsonGraph
from jacobson_lab.graph.lengths import NO_CYCLE, LengthValue
from jacobson_lab.oracles.walks import iter_bits, reachable


def components(G: JacobsonGraph) -> List[List[int]]:
    """Connected components as ascending id lists, ordered by smallest member."""
    remaining = G.all_mask
    result = []
    while remaining:
        low = remaining & -remaining
        comp = reachable(G.rows, low, remaining)
        result.append(list(iter_bits(comp)))
        remaining &= ~comp
    return result


def is_connected(G: JacobsonGraph) -> bool:
    return G.n <= 1 or reachable(G.rows, 1, G.all_mask) == G.all_mask


def girth(G: JacobsonGraph) -> LengthValue:
    """
    Length of a shortest cycle, or NoCycle for a forest.

    BFS from every vertex; a non-tree edge (u, v) closes a cycle of length at
    most dist(u) + dist(v) + 1 and the minimum over all roots is exact.
    """
    adj = [G.neighbors(v) for v in range(G.n)]
    best: Optional[int] = None
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
        if best == 3:
            break
    return NO_CYCLE if best is None else LengthValue(best)


def eccentricity(G: JacobsonGraph, root: int) -> Optional[int]:
    """Largest BFS distance from root, or None when some vertex is unreachable."""
    seen = 1 << root
    frontier = seen
    depth = 0
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.rows[v]
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        depth += 1
    return depth if seen == G.all_mask else None


def diameter(G: JacobsonGraph) -> Optional[int]:
    """Maximum eccentricity; None for a disconnected graph."""
    best = 0
    for root in range(G.n):
        ecc = eccentricity(G, root)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best
