"""
Ring catalogs for surveys.

The local catalog holds every Z_{p^k}, GF(p^k) with k >= 2 and
GF(q)[x]/(x^m) with m >= 2 up to a maximum order. Products are multisets of
local rings, listed once each in a canonical factor order.
"""

from typing import FrozenSet, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from jacobson_lab.rings.local_ring import (
    GaloisField,
    IntegerModPrimePower,
    LocalRing,
    RingKind,
    TruncatedPoly,
    make_local_ring,
)
from jacobson_lab.rings.primes import prime_power
from jacobson_lab.rings.product_ring import ProductRing, make_product
from jacobson_lab.rings.ring_spec import format_ring
from jacobson_lab.utils import get_logger

logger = get_logger(__name__)

_KIND_RANK = {
    RingKind.GALOIS_FIELD: 0,
    RingKind.TRUNCATED_POLY: 1,
    RingKind.INTEGER_MOD: 2,
}


class CatalogFilter(BaseModel):
    """Which rings a survey covers."""

    model_config = ConfigDict(frozen=True)

    max_order: int = Field(ge=2, description="Largest ring order |R|")
    include_local: bool = Field(default=False, description="Also list single-factor rings")
    kinds: FrozenSet[RingKind] = Field(
        default=frozenset(RingKind), description="Allowed local factor families"
    )


def factor_key(f: LocalRing) -> Tuple[int, int, str]:
    """Canonical factor order: GF, then truncated polynomials, then Z; by size within each."""
    return (_KIND_RANK[f.kind], f.size, f.label)


def local_catalog(max_order: int, kinds: FrozenSet[RingKind] = frozenset(RingKind)) -> List[LocalRing]:
    """All catalog local rings of order <= max_order, in canonical order."""
    rings: List[LocalRing] = []
    for n in range(2, max_order + 1):
        pk = prime_power(n)
        if pk is None:
            continue
        p, k = pk
        if RingKind.INTEGER_MOD in kinds:
            rings.append(make_local_ring(IntegerModPrimePower(p, k)))
        if RingKind.GALOIS_FIELD in kinds and k >= 2:
            rings.append(make_local_ring(GaloisField(p, k)))
        if RingKind.TRUNCATED_POLY in kinds:
            # every base field GF(q) with q^m == n, m >= 2
            for m in range(2, k + 1):
                if k % m == 0:
                    rings.append(make_local_ring(TruncatedPoly(p ** (k // m), m)))
    return sorted(rings, key=factor_key)


def _multisets(
    pool: List[LocalRing], start: int, budget: int
) -> Iterator[List[LocalRing]]:
    for i in range(start, len(pool)):
        f = pool[i]
        if f.size > budget:
            continue
        yield [f]
        for rest in _multisets(pool, i, budget // f.size):
            yield [f] + rest


def catalog(filt: CatalogFilter) -> List[ProductRing]:
    """
    Every product of catalog local rings allowed by the filter.

    Returns:
        Rings sorted by (order, canonical spec text)
    """
    pool = local_catalog(filt.max_order, filt.kinds)
    rings = []
    for factors in _multisets(pool, 0, filt.max_order):
        if len(factors) == 1 and not filt.include_local:
            continue
        rings.append(make_product(sorted(factors, key=factor_key)))
    rings.sort(key=lambda R: (R.size, format_ring(R)))
    logger.debug(f"Catalog up to order {filt.max_order}: {len(rings)} rings")
    return rings
