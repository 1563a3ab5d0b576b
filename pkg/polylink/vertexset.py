"""Dense bit-vector sets of vertex indices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator


@dataclass(frozen=True, slots=True)
class VertexSet:
    """An immutable set of non-negative vertex indices stored as an int mask."""

    bits: int = 0

    def __post_init__(self) -> None:
        """Reject negative masks."""
        if self.bits < 0:
            msg = f"VertexSet mask must be non-negative, got {self.bits}"
            raise ValueError(msg)

    @classmethod
    def of(cls, members: Iterable[int]) -> VertexSet:
        """Build a set from vertex indices."""
        bits = 0
        for member in members:
            if member < 0:
                msg = f"Vertex index must be non-negative, got {member}"
                raise ValueError(msg)
            bits |= 1 << member
        return cls(bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        """Return {0, ..., n-1}."""
        return cls((1 << n) - 1)

    @classmethod
    def empty(cls) -> VertexSet:
        """Return the empty set."""
        return cls(0)

    def __contains__(self, vertex: object) -> bool:
        """Check membership."""
        return isinstance(vertex, int) and vertex >= 0 and bool(self.bits >> vertex & 1)

    def __iter__(self) -> Iterator[int]:
        """Iterate members in ascending order."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        """Return the number of members."""
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        """Return True unless empty."""
        return self.bits != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~other.bits)

    def __le__(self, other: VertexSet) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: VertexSet) -> bool:
        return self <= other and self.bits != other.bits

    def shifted(self, offset: int) -> VertexSet:
        """Return the set with every index increased by ``offset``."""
        return VertexSet(self.bits << offset)

    def sorted(self) -> tuple[int, ...]:
        """Return members as an ascending tuple."""
        return tuple(self)

    def max(self) -> int:
        """Return the largest member."""
        if not self.bits:
            msg = "max() of an empty VertexSet"
            raise ValueError(msg)
        return self.bits.bit_length() - 1

    def __repr__(self) -> str:
        return f"VertexSet({set(self) if self.bits else '{}'})"
