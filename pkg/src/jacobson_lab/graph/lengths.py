"""Cycle and path lengths with a distinguished 'no such cycle' bottom."""

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional


@total_ordering
@dataclass(frozen=True)
class LengthValue:
    """A length in edges, or the absence of any cycle (sorts below every integer)."""

    length: Optional[int] = None

    @property
    def is_absent(self) -> bool:
        return self.length is None

    def __lt__(self, other: "LengthValue") -> bool:
        if not isinstance(other, LengthValue):
            return NotImplemented
        if self.length is None:
            return other.length is not None
        return other.length is not None and self.length < other.length

    def __str__(self) -> str:
        return "NoCycle" if self.length is None else str(self.length)

    def to_json(self) -> int | str:
        return "NoCycle" if self.length is None else self.length


NO_CYCLE = LengthValue(None)


def length_of(value: int) -> LengthValue:
    return LengthValue(value)
