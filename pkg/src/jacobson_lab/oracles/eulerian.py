"""Eulerian tour and trail oracle (Hierholzer)."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np

from jacobson_lab.graph.jgraph import JacobsonGraph
from jacobson_lab.oracles.walks import Walk, WalkKind, reachable


class EulerKind(str, Enum):
    TOUR = "tour"
    TRAIL = "trail"
    NEITHER = "neither"


@dataclass(frozen=True)
class EulerResult:
    """Classification plus a witness walk when one exists."""

    kind: EulerKind
    walk: Optional[Walk] = None
    odd_vertices: int = 0


def _hierholzer(G: JacobsonGraph, start: int) -> List[int]:
    adj = [G.neighbors(v) for v in range(G.n)]
    pointer = [0] * G.n
    used = np.zeros_like(G.adjacency)
    stack = [start]
    circuit: List[int] = []
    while stack:
        v = stack[-1]
        nbrs = adj[v]
        while pointer[v] < len(nbrs) and used[v, nbrs[pointer[v]]]:
            pointer[v] += 1
        if pointer[v] < len(nbrs):
            w = nbrs[pointer[v]]
            used[v, w] = used[w, v] = True
            stack.append(w)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def eulerian(G: JacobsonGraph) -> EulerResult:
    """
    Classify G as having an Eulerian tour, only an Eulerian trail, or neither.

    The whole graph must be connected (isolated vertices count). A tour
    starts and ends at vertex 0; a trail starts at the smaller odd-degree
    vertex. A single vertex has the empty tour.
    """
    if reachable(G.rows, 1, G.all_mask) != G.all_mask:
        return EulerResult(EulerKind.NEITHER)
    odd = [v for v in range(G.n) if G.rows[v].bit_count() % 2]
    if len(odd) == 0:
        return EulerResult(EulerKind.TOUR, Walk(WalkKind.TOUR, tuple(_hierholzer(G, 0))))
    if len(odd) == 2:
        walk = Walk(WalkKind.TRAIL, tuple(_hierholzer(G, odd[0])))
        return EulerResult(EulerKind.TRAIL, walk, odd_vertices=2)
    return EulerResult(EulerKind.NEITHER, odd_vertices=len(odd))
