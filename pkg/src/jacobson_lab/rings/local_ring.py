"""
Exact arithmetic for finite local commutative rings.

Three families are supported:
- Z_{p^k}, integers modulo a prime power
- GF(p^k), built on the lexicographically smallest monic irreducible modulus
- GF(q)[x]/(x^m), truncated polynomials over a finite field

Every element is a Code: an integer in [0, size). For Z_{p^k} the code is the
residue itself; for the polynomial families it is the little-endian digit
string of the coefficients (base p for GF(p^k), base q for GF(q)[x]/(x^m)).
Addition in both polynomial families is therefore digitwise modulo p.
"""

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from jacobson_lab.rings.primes import is_prime, prime_power
from jacobson_lab.utils.exceptions import RingArithmeticError, RingConstructionError

# Rings up to this size get precomputed operation tables.
TABLE_SIZE_LIMIT = 256


class RingKind(str, Enum):
    """Family of a local ring."""

    INTEGER_MOD = "Z"
    GALOIS_FIELD = "GF"
    TRUNCATED_POLY = "TRUNC"


@dataclass(frozen=True)
class IntegerModPrimePower:
    """Descriptor for Z_{p^k}."""

    p: int
    k: int = 1


@dataclass(frozen=True)
class GaloisField:
    """Descriptor for GF(p^k)."""

    p: int
    k: int = 1


@dataclass(frozen=True)
class TruncatedPoly:
    """Descriptor for GF(q)[x]/(x^m)."""

    q: int
    m: int


RingDescriptor = Union[IntegerModPrimePower, GaloisField, TruncatedPoly]


def _to_digits(code: int, base: int, length: int) -> List[int]:
    digits = []
    for _ in range(length):
        code, r = divmod(code, base)
        digits.append(r)
    return digits


def _from_digits(digits: Sequence[int], base: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * base + d
    return code


def _poly_rem(f: Sequence[int], g: Sequence[int], p: int) -> List[int]:
    """Remainder of f modulo monic g over Z_p (coefficients low to high)."""
    rem = list(f)
    dg = len(g) - 1
    for d in range(len(rem) - 1, dg - 1, -1):
        c = rem[d]
        if c:
            for j in range(dg + 1):
                rem[d - dg + j] = (rem[d - dg + j] - c * g[j]) % p
    return rem[:dg]


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Check a monic polynomial over Z_p for monic divisors of degree <= deg/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(reversed(tail)) + [1]
            if not any(_poly_rem(modulus, divisor, p)):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """
    Lexicographically smallest monic irreducible polynomial of degree k over Z_p.

    Candidates are compared high-degree coefficient first.

    Args:
        p: Prime characteristic
        k: Degree >= 1

    Returns:
        Coefficients from constant term up to the leading 1
    """
    for tail in itertools.product(range(p), repeat=k):
        modulus = tuple(reversed(tail)) + (1,)
        if _is_irreducible(modulus, p):
            return modulus
    raise RingConstructionError(f"no irreducible polynomial of degree {k} over Z_{p}")


@dataclass(frozen=True)
class LocalRing:
    """A finite local ring with its residue field and maximal ideal sizes."""

    descriptor: RingDescriptor
    p: int
    size: int
    radical_size: int
    residue_field_size: int
    modulus: Tuple[int, ...] = field(default=())

    @property
    def kind(self) -> RingKind:
        if isinstance(self.descriptor, IntegerModPrimePower):
            return RingKind.INTEGER_MOD
        if isinstance(self.descriptor, GaloisField):
            return RingKind.GALOIS_FIELD
        return RingKind.TRUNCATED_POLY

    @property
    def is_field(self) -> bool:
        return self.radical_size == 1

    @property
    def label(self) -> str:
        """Spec text for this factor, e.g. 'Z4', 'GF(4)', 'GF(2)[x]/(x^2)'."""
        d = self.descriptor
        if isinstance(d, IntegerModPrimePower):
            return f"Z{self.size}"
        if isinstance(d, GaloisField):
            return f"GF({self.size})"
        return f"GF({d.q})[x]/(x^{d.m})"

    def __str__(self) -> str:
        return self.label

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, a: int) -> None:
        if not 0 <= a < self.size:
            raise RingArithmeticError(f"code {a} out of range for {self.label}", code=a)

    @cached_property
    def _degree(self) -> int:
        # Number of base-p digits in a code of the polynomial families
        return len(self.modulus) - 1

    @cached_property
    def _base_field(self) -> "LocalRing":
        d = self.descriptor
        assert isinstance(d, TruncatedPoly)
        p, k = prime_power(d.q)  # type: ignore[misc]
        return make_local_ring(GaloisField(p, k))

    def _add(self, a: int, b: int) -> int:
        if self.kind is RingKind.INTEGER_MOD:
            return (a + b) % self.size
        out, place = 0, 1
        while a or b:
            a, da = divmod(a, self.p)
            b, db = divmod(b, self.p)
            out += ((da + db) % self.p) * place
            place *= self.p
        return out

    def _neg(self, a: int) -> int:
        if self.kind is RingKind.INTEGER_MOD:
            return (-a) % self.size
        out, place = 0, 1
        while a:
            a, da = divmod(a, self.p)
            out += ((-da) % self.p) * place
            place *= self.p
        return out

    def _mul(self, a: int, b: int) -> int:
        kind = self.kind
        if kind is RingKind.INTEGER_MOD:
            return (a * b) % self.size
        if kind is RingKind.GALOIS_FIELD:
            k = self._degree
            fa = _to_digits(a, self.p, k)
            fb = _to_digits(b, self.p, k)
            prod = [0] * (2 * k - 1)
            for i, ai in enumerate(fa):
                if ai:
                    for j, bj in enumerate(fb):
                        prod[i + j] = (prod[i + j] + ai * bj) % self.p
            return _from_digits(_poly_rem(prod, self.modulus, self.p), self.p)

        base = self._base_field
        q, m = base.size, self.descriptor.m  # type: ignore[union-attr]
        fa = _to_digits(a, q, m)
        fb = _to_digits(b, q, m)
        prod = [0] * m
        for i, ai in enumerate(fa):
            if ai:
                for j in range(m - i):
                    if fb[j]:
                        prod[i + j] = base.add(prod[i + j], base.mul(ai, fb[j]))
        return _from_digits(prod, q)

    @cached_property
    def _tables(self) -> Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
        if self.size > TABLE_SIZE_LIMIT:
            return None
        n = self.size
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(a, n):
                add[a, b] = add[b, a] = self._add(a, b)
                mul[a, b] = mul[b, a] = self._mul(a, b)
        neg = np.array([self._neg(a) for a in range(n)], dtype=np.int64)
        return add, mul, neg

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        tables = self._tables
        return int(tables[0][a, b]) if tables is not None else self._add(a, b)

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        tables = self._tables
        return int(tables[1][a, b]) if tables is not None else self._mul(a, b)

    def neg(self, a: int) -> int:
        self._check(a)
        tables = self._tables
        return int(tables[2][a]) if tables is not None else self._neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def arith(self, op: str, a: int, b: int = 0) -> int:
        """
        Apply a ring operation by tag.

        Args:
            op: One of "add", "mul", "neg"
            a: First operand
            b: Second operand (ignored for "neg")

        Returns:
            Result code

        Raises:
            RingArithmeticError: If a code is out of range or the tag is unknown
        """
        if op == "add":
            return self.add(a, b)
        if op == "mul":
            return self.mul(a, b)
        if op == "neg":
            return self.neg(a)
        raise RingArithmeticError(f"unknown operation '{op}'")

    def power(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # Units, radical, residue field
    # ------------------------------------------------------------------

    def residue_class(self, a: int) -> int:
        """Image of a in the residue field, as a code of residue_field()."""
        self._check(a)
        if self.kind is RingKind.GALOIS_FIELD:
            return a
        return a % self.residue_field_size

    def is_unit(self, a: int) -> bool:
        return self.residue_class(a) != 0

    def in_maximal_ideal(self, a: int) -> bool:
        return self.residue_class(a) == 0

    def inverse(self, a: int) -> int:
        """
        Multiplicative inverse of a unit.

        Raises:
            RingArithmeticError: If a is not a unit
        """
        if not self.is_unit(a):
            raise RingArithmeticError(f"{a} is not a unit of {self.label}", code=a)
        if self.kind is RingKind.INTEGER_MOD:
            return pow(a, -1, self.size)
        return self.power(a, self.size - self.radical_size - 1)

    def elements(self) -> range:
        return range(self.size)

    def maximal_ideal(self) -> List[int]:
        """Codes of the maximal ideal (the Jacobson radical), ascending."""
        return [a for a in range(self.size) if self.in_maximal_ideal(a)]

    def units(self) -> Iterator[int]:
        return (a for a in range(self.size) if self.is_unit(a))

    def residue_field(self) -> "LocalRing":
        """The residue field R/m, whose codes match residue_class()."""
        if self.kind is RingKind.GALOIS_FIELD:
            return self
        if self.kind is RingKind.INTEGER_MOD:
            return make_local_ring(IntegerModPrimePower(self.p, 1))
        return self._base_field

    @cached_property
    def residue_inverse_table(self) -> np.ndarray:
        """For each code, the residue-field inverse of its class, or -1 for non-units."""
        field_ring = self.residue_field()
        inverses = np.full(field_ring.size, -1, dtype=np.int64)
        for r in range(1, field_ring.size):
            inverses[r] = field_ring.inverse(r)
        residues = self.residue_table
        return inverses[residues]

    @cached_property
    def residue_table(self) -> np.ndarray:
        return np.array([self.residue_class(a) for a in range(self.size)], dtype=np.int64)

    def radical_hit_table(self) -> np.ndarray:
        """
        Boolean size x size table of the coordinate adjacency test.

        Entry [a, b] is True iff 1 - ab lies in the maximal ideal, which holds
        iff the residues of a and b are mutually inverse.
        """
        return self.residue_inverse_table[:, None] == self.residue_table[None, :]


def make_local_ring(descriptor: RingDescriptor) -> LocalRing:
    """
    Build a local ring from its descriptor.

    GF(q)[x]/(x^1) is normalized to GF(q).

    Args:
        descriptor: IntegerModPrimePower, GaloisField or TruncatedPoly

    Returns:
        Fully initialized LocalRing

    Raises:
        RingConstructionError: If the descriptor is invalid or degenerate
    """
    if isinstance(descriptor, IntegerModPrimePower):
        p, k = descriptor.p, descriptor.k
        if not is_prime(p):
            raise RingConstructionError(f"Z_{{p^k}} needs a prime p, got {p}", descriptor)
        if k < 1:
            raise RingConstructionError("exponent must be at least 1 (ring would be zero)", descriptor)
        return LocalRing(descriptor, p, p**k, p ** (k - 1), p)

    if isinstance(descriptor, GaloisField):
        p, k = descriptor.p, descriptor.k
        if not is_prime(p):
            raise RingConstructionError(f"GF(p^k) needs a prime p, got {p}", descriptor)
        if k < 1:
            raise RingConstructionError("extension degree must be at least 1", descriptor)
        q = p**k
        return LocalRing(descriptor, p, q, 1, q, smallest_irreducible(p, k))

    if isinstance(descriptor, TruncatedPoly):
        q, m = descriptor.q, descriptor.m
        pk = prime_power(q)
        if pk is None:
            raise RingConstructionError(f"base field order {q} is not a prime power", descriptor)
        if m < 1:
            raise RingConstructionError("nilpotency degree must be at least 1", descriptor)
        p, k = pk
        if m == 1:
            return make_local_ring(GaloisField(p, k))
        base_modulus = smallest_irreducible(p, k)
        return LocalRing(descriptor, p, q**m, q ** (m - 1), q, base_modulus)

    raise RingConstructionError(f"unknown ring descriptor {descriptor!r}", descriptor)
