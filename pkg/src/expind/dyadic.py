from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Any

from .graph import INFINITY, ExtendedDist


@total_ordering
@dataclass(frozen=True)
class Dyadic:
    """Exact nonnegative rational num / 2**shift, kept with num odd or shift zero."""

    num: int
    shift: int = 0

    def __post_init__(self) -> None:
        if self.num < 0 or self.shift < 0:
            raise ValueError(f"Dyadic needs num >= 0 and shift >= 0, got {self.num}/2^{self.shift}")
        if self.shift and not self.num & 1:
            raise ValueError(f"Dyadic {self.num}/2^{self.shift} is not normalized")

    @classmethod
    def of(cls, num: int, shift: int = 0) -> Dyadic:
        if num == 0:
            return cls(0, 0)
        trailing = (num & -num).bit_length() - 1
        k = min(trailing, shift)
        return cls(num >> k, shift - k)

    @classmethod
    def half_power(cls, exponent: int) -> Dyadic:
        """(1/2) ** exponent; negative exponents give powers of two."""
        if exponent < 0:
            return cls(1 << -exponent, 0)
        return cls(1, exponent)

    @classmethod
    def decay(cls, dist: ExtendedDist) -> Dyadic:
        """(1/2) ** (dist - 1), with (1/2) ** inf = 0."""
        if dist == INFINITY:
            return ZERO
        return cls.half_power(int(dist) - 1)

    def __add__(self, other: Dyadic) -> Dyadic:
        s = max(self.shift, other.shift)
        total = (self.num << (s - self.shift)) + (other.num << (s - other.shift))
        return Dyadic.of(total, s)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return dyadic_cmp(self, other) < 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.shift)

    def to_json(self) -> dict[str, Any]:
        return {"num": str(self.num), "shift": self.shift}

    def __str__(self) -> str:
        if self.shift == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.shift}"


ZERO = Dyadic(0)
ONE = Dyadic(1)
TWO = Dyadic(2)


def dyadic_add(a: Dyadic, b: Dyadic) -> Dyadic:
    return a + b


def dyadic_sum(values: Iterable[Dyadic]) -> Dyadic:
    total = ZERO
    for v in values:
        total = total + v
    return total


def dyadic_cmp(a: Dyadic, b: Dyadic) -> int:
    """Three-way comparison: -1, 0 or 1."""
    s = max(a.shift, b.shift)
    x = a.num << (s - a.shift)
    y = b.num << (s - b.shift)
    return (x > y) - (x < y)
