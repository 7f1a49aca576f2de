"""
Parser for the textual ring specification language.

Grammar (whitespace-insensitive between tokens):

    ring   := factor { ("x" | "*") factor } ;
    factor := "Z" nat | "GF" "(" nat ")" [ "[x]/(x^" nat ")" ] ;
    nat    := digit { digit } ;

"Z12" is split by the Chinese remainder theorem into "Z4 x Z3" with primes in
ascending order. Explicit products keep the written order. Errors carry the
UTF-8 byte offset of the offending token.
"""

from typing import List

from jacobson_lab.rings.local_ring import (
    GaloisField,
    IntegerModPrimePower,
    LocalRing,
    TruncatedPoly,
    make_local_ring,
)
from jacobson_lab.rings.primes import factorize, prime_power
from jacobson_lab.rings.product_ring import ProductRing, make_product
from jacobson_lab.utils.exceptions import RingSpecError

# Orders above these are far past any graph the tools can build.
MAX_FACTOR_ORDER = 1 << 32
MAX_FIELD_ORDER = 1 << 16
_MAX_DIGITS = len(str(MAX_FACTOR_ORDER))


class _Parser:
    """Recursive-descent parser over a single spec string."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> RingSpecError:
        at = self.pos if pos is None else pos
        offset = len(self.text[:at].encode("utf-8", "surrogatepass"))
        return RingSpecError(message, self.text, offset)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected '{literal}', found '{found}'")
        self.pos += len(literal)

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise self.error(f"expected a number, found '{found}'")
        if self.pos - start > _MAX_DIGITS:
            raise self.error("number is too large", start)
        value = int(self.text[start : self.pos])
        if value > MAX_FACTOR_ORDER:
            raise self.error(f"{value} is too large", start)
        return value

    # ring := factor { ("x" | "*") factor }
    def ring(self) -> List[LocalRing]:
        factors = self.factor()
        while self.peek() in ("x", "*"):
            self.pos += 1
            factors.extend(self.factor())
        if self.peek():
            raise self.error(f"unexpected '{self.peek()}'")
        return factors

    # factor := "Z" nat | "GF" "(" nat ")" [ "[x]/(x^" nat ")" ]
    def factor(self) -> List[LocalRing]:
        head = self.peek()
        if head == "Z":
            self.pos += 1
            self.skip_ws()
            start = self.pos
            n = self.nat()
            if n < 2:
                raise self.error(f"Z{n} has no non-zero identity", start)
            return [make_local_ring(IntegerModPrimePower(p, k)) for p, k in factorize(n)]

        if head == "G":
            self.expect("GF")
            self.expect("(")
            self.skip_ws()
            start = self.pos
            q = self.nat()
            if q < 2:
                raise self.error(f"GF({q}) has no non-zero identity", start)
            if q > MAX_FIELD_ORDER:
                raise self.error(f"GF({q}) is too large", start)
            pk = prime_power(q)
            if pk is None:
                raise self.error(f"GF({q}): {q} is not a prime power", start)
            self.expect(")")
            if self.peek() == "[":
                for token in ("[", "x", "]", "/", "(", "x", "^"):
                    self.expect(token)
                self.skip_ws()
                start = self.pos
                m = self.nat()
                if m < 2:
                    raise self.error(f"truncation exponent must be at least 2, got {m}", start)
                if m > 64 or q**m > MAX_FACTOR_ORDER:
                    raise self.error(f"GF({q})[x]/(x^{m}) is too large", start)
                self.expect(")")
                return [make_local_ring(TruncatedPoly(q, m))]
            return [make_local_ring(GaloisField(*pk))]

        found = head or "end of input"
        raise self.error(f"expected 'Z' or 'GF', found '{found}'")


def parse_ring(text: str) -> ProductRing:
    """
    Parse a ring specification.

    Args:
        text: Spec text such as "Z6", "GF(4) x Z2" or "GF(2)[x]/(x^2)"

    Returns:
        ProductRing with factors in written order (CRT splits ascending)

    Raises:
        RingSpecError: On any syntax or semantic error, with byte offset
    """
    return make_product(_Parser(text).ring())


def format_ring(R: ProductRing) -> str:
    """
    Canonical spec text of a ring; parse_ring(format_ring(R)) == R.

    Args:
        R: Product ring

    Returns:
        Factor labels joined by " x "
    """
    return R.label
