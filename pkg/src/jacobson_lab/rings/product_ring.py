"""
Direct products of finite local rings.

Every finite commutative ring is a direct sum R = R_1 + ... + R_n of local
rings, with J(R) = J(R_1) + ... + J(R_n) and U(R) = U(R_1) + ... + U(R_n).
Elements are plain tuples of per-factor codes; factor order is kept exactly
as given.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, List, NamedTuple, Sequence, Tuple

from jacobson_lab.rings.local_ring import LocalRing
from jacobson_lab.utils.exceptions import (
    NotAVertexError,
    RingArithmeticError,
    RingConstructionError,
)

RingElement = Tuple[int, ...]


@dataclass(frozen=True)
class ProductRing:
    """Ordered direct product of local rings."""

    factors: Tuple[LocalRing, ...]

    def __post_init__(self):
        if not self.factors:
            raise RingConstructionError("a product ring needs at least one factor")

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def is_local(self) -> bool:
        return self.n == 1

    @cached_property
    def size(self) -> int:
        total = 1
        for f in self.factors:
            total *= f.size
        return total

    @cached_property
    def radical_size(self) -> int:
        total = 1
        for f in self.factors:
            total *= f.radical_size
        return total

    @property
    def is_semisimple(self) -> bool:
        return self.radical_size == 1

    @property
    def vertex_count(self) -> int:
        return self.size - self.radical_size

    @property
    def residue_field_orders(self) -> Tuple[int, ...]:
        return tuple(f.residue_field_size for f in self.factors)

    @property
    def label(self) -> str:
        return " x ".join(f.label for f in self.factors)

    def __str__(self) -> str:
        return self.label

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def check(self, x: Sequence[int]) -> RingElement:
        """Validate an element and return it as a tuple."""
        if len(x) != self.n:
            raise RingArithmeticError(f"{tuple(x)} has {len(x)} coordinates, expected {self.n}")
        for xi, f in zip(x, self.factors):
            if not 0 <= xi < f.size:
                raise RingArithmeticError(f"coordinate {xi} out of range for {f.label}", code=xi)
        return tuple(x)

    def elements(self) -> Iterator[RingElement]:
        """All elements in lexicographic coordinate order."""
        return itertools.product(*(range(f.size) for f in self.factors))

    def radical_elements(self) -> List[RingElement]:
        """Elements of J(R) in lexicographic order."""
        return list(itertools.product(*(f.maximal_ideal() for f in self.factors)))

    def vertices(self) -> Iterator[RingElement]:
        """Elements outside J(R) in lexicographic order."""
        return (x for x in self.elements() if not self.in_radical(x))

    def zero(self) -> RingElement:
        return (0,) * self.n

    def one(self) -> RingElement:
        return (1,) * self.n

    def e(self, i: int) -> RingElement:
        """Indicator element with 1 in coordinate i (0-based)."""
        return tuple(1 if j == i else 0 for j in range(self.n))

    def project(self, x: Sequence[int], i: int) -> int:
        return x[i]

    def add(self, x: Sequence[int], y: Sequence[int]) -> RingElement:
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def mul(self, x: Sequence[int], y: Sequence[int]) -> RingElement:
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x: Sequence[int]) -> RingElement:
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def sub(self, x: Sequence[int], y: Sequence[int]) -> RingElement:
        return self.add(x, self.neg(y))

    def is_unit(self, x: Sequence[int]) -> bool:
        return all(f.is_unit(a) for f, a in zip(self.factors, x))

    def in_radical(self, x: Sequence[int]) -> bool:
        return all(f.in_maximal_ideal(a) for f, a in zip(self.factors, x))

    def is_vertex(self, x: Sequence[int]) -> bool:
        return not self.in_radical(x)

    def residue(self, x: Sequence[int]) -> RingElement:
        """Coordinatewise residue classes (the quotient map R -> R/J(R))."""
        return tuple(f.residue_class(a) for f, a in zip(self.factors, x))


def make_product(factors: Sequence[LocalRing]) -> ProductRing:
    """
    Build R = R_1 + ... + R_n from local factors, keeping their order.

    Raises:
        RingConstructionError: If the factor list is empty
    """
    return ProductRing(tuple(factors))


class Semisimplification(NamedTuple):
    """R/J(R) together with the quotient map."""

    ring: ProductRing
    quotient: Callable[[Sequence[int]], RingElement]


def semisimplify(R: ProductRing) -> Semisimplification:
    """
    Replace each factor by its residue field.

    Returns:
        Semisimplification with the field product and the coordinatewise
        residue map from R
    """
    return Semisimplification(
        ring=make_product([f.residue_field() for f in R.factors]),
        quotient=R.residue,
    )


def _plus_minus_one(f: LocalRing) -> Tuple[int, int]:
    field_ring = f.residue_field()
    return 1, field_ring.neg(1)


def epsilon_x_stated(R: ProductRing, x: Sequence[int]) -> int:
    """
    The degree lemma's correction term, as stated.

    Returns:
        1 iff every coordinate lies in J(R_i) + {0, 1, -1}

    Raises:
        NotAVertexError: If x is in J(R)
    """
    x = R.check(x)
    if R.in_radical(x):
        raise NotAVertexError(x)
    for f, a in zip(R.factors, x):
        r = f.residue_class(a)
        if r != 0 and r not in _plus_minus_one(f):
            return 0
    return 1


def epsilon_x_corrected(R: ProductRing, x: Sequence[int]) -> int:
    """
    Self-adjacency indicator: 1 iff x_i^2 - 1 lies in J(R_i) for some i.

    Equivalently some coordinate lies in J(R_i) + {1, -1}, so x would be
    counted among its own neighbors by the union bound of the degree lemma.
    """
    x = R.check(x)
    if R.in_radical(x):
        raise NotAVertexError(x)
    for f, a in zip(R.factors, x):
        if f.residue_class(a) in _plus_minus_one(f):
            return 1
    return 0
