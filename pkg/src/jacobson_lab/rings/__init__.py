"""Finite commutative rings: local factors, direct products and the spec parser."""

from jacobson_lab.rings.local_ring import (
    GaloisField,
    IntegerModPrimePower,
    LocalRing,
    RingKind,
    TruncatedPoly,
    make_local_ring,
    smallest_irreducible,
)
from jacobson_lab.rings.product_ring import (
    ProductRing,
    RingElement,
    Semisimplification,
    epsilon_x_corrected,
    epsilon_x_stated,
    make_product,
    semisimplify,
)
from jacobson_lab.rings.ring_spec import format_ring, parse_ring

__all__ = [
    "GaloisField",
    "IntegerModPrimePower",
    "LocalRing",
    "RingKind",
    "TruncatedPoly",
    "make_local_ring",
    "smallest_irreducible",
    "ProductRing",
    "RingElement",
    "Semisimplification",
    "epsilon_x_corrected",
    "epsilon_x_stated",
    "make_product",
    "semisimplify",
    "format_ring",
    "parse_ring",
]
