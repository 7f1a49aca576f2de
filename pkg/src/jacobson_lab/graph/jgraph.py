"""
Jacobson graph construction and the closed-form degree and edge formulas.

The vertex set is R minus J(R) in lexicographic coordinate order, and x ~ y
iff 1 - x_i y_i lies in J(R_i) for some coordinate i. The adjacency is kept
twice: as a read-only numpy boolean matrix and as one Python int bitset per
row for the search oracles.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from jacobson_lab.config import get_settings
from jacobson_lab.rings.product_ring import (
    ProductRing,
    RingElement,
    epsilon_x_corrected,
    epsilon_x_stated,
)
from jacobson_lab.utils import get_logger
from jacobson_lab.utils.exceptions import (
    ExportFormatError,
    GraphSizeError,
    NotAVertexError,
    SelfAdjacencyError,
)

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class JacobsonGraph:
    """Immutable Jacobson graph with dense bitset adjacency."""

    ring: ProductRing
    vertices: Tuple[RingElement, ...]
    adjacency: np.ndarray
    rows: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> Dict[RingElement, int]:
        return {x: i for i, x in enumerate(self.vertices)}

    @cached_property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def index_of(self, x: Sequence[int]) -> int:
        """Vertex id of a ring element."""
        try:
            return self.index[tuple(x)]
        except KeyError:
            raise NotAVertexError(tuple(x)) from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> List[int]:
        return np.flatnonzero(self.adjacency[u]).tolist()

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v in ascending order."""
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return zip(us.tolist(), vs.tolist())

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2


def adjacent(R: ProductRing, x: Sequence[int], y: Sequence[int]) -> bool:
    """
    Test adjacency of two vertices straight from the ring arithmetic.

    Args:
        R: Product ring
        x: First vertex
        y: Second vertex

    Returns:
        True iff 1 - x_i y_i is a non-unit of R_i for some coordinate i

    Raises:
        SelfAdjacencyError: If x == y
        NotAVertexError: If either element lies in J(R)
    """
    x, y = R.check(x), R.check(y)
    if x == y:
        raise SelfAdjacencyError(x)
    for z in (x, y):
        if R.in_radical(z):
            raise NotAVertexError(z)
    for f, a, b in zip(R.factors, x, y):
        if f.in_maximal_ideal(f.sub(1, f.mul(a, b))):
            return True
    return False


def build_graph(R: ProductRing, vertex_limit: Optional[int] = None) -> JacobsonGraph:
    """
    Build the Jacobson graph of R.

    Each factor contributes its coordinate test as a lookup table indexed by
    codes; the rows are OR-ed together and the diagonal cleared.

    Args:
        R: Product ring
        vertex_limit: Largest accepted vertex count (defaults to settings)

    Returns:
        JacobsonGraph with lexicographically ordered vertices

    Raises:
        GraphSizeError: If |R| - |J(R)| exceeds the limit
    """
    if vertex_limit is None:
        vertex_limit = get_settings().graph.vertex_limit
    if R.vertex_count > vertex_limit:
        raise GraphSizeError(R.vertex_count, vertex_limit)

    vertices = tuple(R.vertices())
    nv = len(vertices)
    codes = np.array(vertices, dtype=np.int64).reshape(nv, R.n)

    adjacency = np.zeros((nv, nv), dtype=bool)
    for i, factor in enumerate(R.factors):
        column = codes[:, i]
        adjacency |= factor.radical_hit_table()[np.ix_(column, column)]
    np.fill_diagonal(adjacency, False)
    adjacency.setflags(write=False)

    rows = tuple(
        int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in adjacency
    )
    graph = JacobsonGraph(ring=R, vertices=vertices, adjacency=adjacency, rows=rows)
    logger.debug(f"Built Jacobson graph of {R.label}: {nv} vertices, {graph.edge_count} edges")
    return graph


# ----------------------------------------------------------------------
# Closed forms
# ----------------------------------------------------------------------


def _degree_with(R: ProductRing, x: RingElement, epsilon: int) -> int:
    keep = Fraction(1)
    for f, a in zip(R.factors, x):
        if not f.in_maximal_ideal(a):
            keep *= 1 - Fraction(1, f.residue_field_size)
    value = R.size * (1 - keep) - epsilon
    assert value.denominator == 1
    return int(value)


def degree_closed_form(R: ProductRing, x: Sequence[int]) -> int:
    """
    deg(x) = |R|(1 - prod_{x_i not in J(R_i)} (1 - 1/|F_i|)) - eps_x, as stated.

    Raises:
        NotAVertexError: If x lies in J(R)
    """
    eps = epsilon_x_stated(R, x)
    return _degree_with(R, tuple(x), eps)


def degree_corrected(R: ProductRing, x: Sequence[int]) -> int:
    """The degree formula with the self-adjacency indicator in place of eps_x."""
    eps = epsilon_x_corrected(R, x)
    return _degree_with(R, tuple(x), eps)


@dataclass(frozen=True)
class EdgeCountFormula:
    """Value of the edge-count corollary."""

    twice_edges: Fraction

    @property
    def edges(self) -> Fraction:
        return self.twice_edges / 2

    @property
    def is_integral(self) -> bool:
        return self.edges.denominator == 1

    def render(self) -> str:
        """Integer text, or "p/q" when the formula is not integral."""
        e = self.edges
        return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def edge_count_closed_form(R: ProductRing) -> EdgeCountFormula:
    """
    2|E| = |R|^2 (1 - prod(1 - 1/|F_i| + 1/|F_i|^2)) - |J(R)| (3^O 2^E - 1).

    O and E count the residue fields of odd and even order.
    """
    keep = Fraction(1)
    odd = 0
    for q in R.residue_field_orders:
        keep *= 1 - Fraction(1, q) + Fraction(1, q * q)
        odd += q % 2
    even = R.n - odd
    twice = R.size**2 * (1 - keep) - R.radical_size * (3**odd * 2**even - 1)
    return EdgeCountFormula(twice_edges=Fraction(twice))


def edge_count_corrected(R: ProductRing) -> int:
    """Half the sum of corrected degrees over all vertices."""
    total = sum(degree_corrected(R, x) for x in R.vertices())
    return total // 2


def degree_oracle(G: JacobsonGraph, x: Sequence[int]) -> int:
    """Row popcount."""
    return G.degree(G.index_of(x))


def edge_count_oracle(G: JacobsonGraph) -> int:
    return G.edge_count


# ----------------------------------------------------------------------
# Export
# ----------------------------------------------------------------------


def vertex_label(x: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


def export(G: JacobsonGraph, fmt: str) -> str:
    """
    Serialize a graph.

    Args:
        G: Jacobson graph
        fmt: "dot" for Graphviz text, "edges" for "u v" lines by vertex id

    Returns:
        Text ending in a newline (empty for an edgeless "edges" export)

    Raises:
        ExportFormatError: For any other format
    """
    if fmt == "edges":
        return "".join(f"{u} {v}\n" for u, v in G.edges())
    if fmt == "dot":
        labels = [vertex_label(x) for x in G.vertices]
        lines = ["graph jacobson {"]
        lines.extend(f'"{label}";' for label in labels)
        lines.extend(f'"{labels[u]}" -- "{labels[v]}";' for u, v in G.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ExportFormatError(fmt)


def to_networkx(G: JacobsonGraph) -> nx.Graph:
    """networkx view of the graph; nodes are vertex ids with an 'element' attribute."""
    graph = nx.Graph()
    for i, x in enumerate(G.vertices):
        graph.add_node(i, element=x)
    graph.add_edges_from(G.edges())
    return graph
