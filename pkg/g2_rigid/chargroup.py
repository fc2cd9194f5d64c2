"""Tame characters as elements of Q/Z.

A character p/q sends a generator of the tame inertia group to exp(2*pi*i*p/q).
The group law is addition of fractions modulo 1, so the trivial character is
0/1 and the quadratic character -1 is 1/2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd

from g2_rigid.errors import InvalidDataError

_FRACTION_RE = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")


@total_ordering
@dataclass(frozen=True, eq=True)
class Character:
    """A tame character, stored as a reduced fraction in [0, 1)."""

    value: Fraction

    def __post_init__(self) -> None:
        value = Fraction(self.value) % 1
        object.__setattr__(self, "value", value)

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> Character:
        if denominator == 0:
            raise InvalidDataError("character denominator must be nonzero")
        return cls(Fraction(numerator, denominator))

    @classmethod
    def parse(cls, text: str) -> Character:
        """Parse the "p/q" wire format."""
        if isinstance(text, Character):
            return text
        match = _FRACTION_RE.match(str(text))
        if not match:
            raise InvalidDataError(f"invalid character {text!r}, expected 'p/q'")
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise InvalidDataError(f"invalid character {text!r}, zero denominator")
        return cls.of(numerator, denominator)

    # Group structure

    def __mul__(self, other: Character) -> Character:
        if not isinstance(other, Character):
            return NotImplemented
        return Character(self.value + other.value)

    def __truediv__(self, other: Character) -> Character:
        if not isinstance(other, Character):
            return NotImplemented
        return Character(self.value - other.value)

    def __invert__(self) -> Character:
        return self.inverse()

    def __pow__(self, k: int) -> Character:
        return Character(self.value * k)

    def inverse(self) -> Character:
        return Character(-self.value)

    @property
    def order(self) -> int:
        return self.value.denominator

    @property
    def is_trivial(self) -> bool:
        return self.value == 0

    def galois_orbit(self) -> frozenset[Character]:
        """All coprime powers of this character."""
        n = self.order
        return frozenset(self ** k for k in range(1, n + 1) if gcd(k, n) == 1)

    # Ordering is by fraction value; ties never occur for distinct characters.
    def __lt__(self, other: Character) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.value < other.value

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"

    def __repr__(self) -> str:
        return f"Character({self})"

    def to_json(self) -> str:
        return str(self)


TRIVIAL = Character.of(0)
QUADRATIC = Character.of(1, 2)


def mul(a: Character, b: Character) -> Character:
    return a * b


def inv(a: Character) -> Character:
    return a.inverse()


def power(a: Character, k: int) -> Character:
    return a ** k


def order(a: Character) -> int:
    return a.order


def is_trivial(a: Character) -> bool:
    return a.is_trivial


def galois_orbit(a: Character) -> frozenset[Character]:
    return a.galois_orbit()


def characters_of_order_dividing(n: int) -> list[Character]:
    """The n characters k/n, in increasing order."""
    if n < 1:
        raise InvalidDataError("order bound must be positive")
    return [Character.of(k, n) for k in range(n)]


def signed(a: Character) -> Character:
    """The character -a in the multiplicative notation, i.e. a twisted by -1."""
    return a * QUADRATIC
