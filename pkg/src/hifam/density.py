"""Exact dyadic rationals for family densities.

Every density in this toolkit is (family size) / 2^(host edge count), so a
numerator plus a power-of-two exponent represents it exactly and comparisons
never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class DyadicDensity:
    """value = numerator / 2**exponent, stored normalized (numerator odd or zero)."""

    numerator: int
    exponent: int

    def __post_init__(self) -> None:
        num, exp = self.numerator, self.exponent
        if num < 0 or exp < 0:
            raise ValueError(f"negative numerator or exponent: {num}/2^{exp}")
        if num == 0:
            exp = 0
        else:
            while num % 2 == 0 and exp > 0:
                num //= 2
                exp -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    def __lt__(self, other: "DyadicDensity") -> bool:
        if not isinstance(other, DyadicDensity):
            return NotImplemented
        # cross-shift to a common exponent; exact in arbitrary precision
        return self.numerator << other.exponent < other.numerator << self.exponent

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def scaled_numerator(self, exponent: int) -> int:
        """Numerator when rewritten over 2**exponent (must not lose bits)."""
        if exponent < self.exponent:
            raise ValueError(f"cannot rescale /2^{self.exponent} to /2^{exponent}")
        return self.numerator << (exponent - self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.exponent}"


def density_string(numerator: int, exponent: int) -> str:
    """Unnormalized 'k/2^e' rendering (used for persisted records)."""
    return f"{numerator}/2^{exponent}"
