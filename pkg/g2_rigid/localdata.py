"""Local monodromy data and the numerology of formal local systems.

A local monodromy is a finite map character -> Jordan partition; a formal
local system collects one at each finite singular point plus one at infinity.
The numerology implemented here:

1. rank: common degree of all local monodromies
2. e(s, rho, i): number of Jordan blocks at (s, rho) of length >= i
3. rigidity index: (1 - #D) * n^2 + sum of GL centralizer dimensions
4. Euler characteristic: (1 - #D) * n + sum of e_1(s, trivial)

The formulas evaluate on any valid data; they carry their geometric meaning
only for irreducible middle extensions, which the data alone cannot certify.
"""

from __future__ import annotations

import numbers
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Optional

from g2_rigid.chargroup import QUADRATIC, TRIVIAL, Character
from g2_rigid.errors import InternalConsistencyError, InvalidDataError, Violation

INFINITY = "infinity"


@dataclass(frozen=True)
class Partition:
    """Jordan block lengths, weakly decreasing."""

    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        for b in self.blocks:
            if isinstance(b, bool) or not isinstance(b, numbers.Integral):
                raise InvalidDataError(f"block lengths must be integers, got {b!r}")
        blocks = tuple(sorted((int(b) for b in self.blocks), reverse=True))
        if not blocks:
            raise InvalidDataError("partition must have at least one block")
        if blocks[-1] < 1:
            raise InvalidDataError(f"block lengths must be positive, got {list(blocks)}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, *blocks: int) -> Partition:
        return cls(tuple(blocks))

    @classmethod
    def from_e_sequence(cls, seq: Iterable[int]) -> Optional[Partition]:
        """Rebuild a partition from e_1, e_2, ...

        The multiplicity of block length m is e_m - e_(m+1). A negative
        multiplicity is an error, never clamped. Returns None for the empty
        partition (all e_i zero).
        """
        seq = list(seq)
        while seq and seq[-1] == 0:
            seq.pop()
        if not seq:
            return None
        blocks: list[int] = []
        for m, e_m in enumerate(seq, start=1):
            e_next = seq[m] if m < len(seq) else 0
            multiplicity = e_m - e_next
            if multiplicity < 0:
                raise InternalConsistencyError(
                    f"non-monotone e-sequence {seq}: e_{m} = {e_m} < e_{m + 1} = {e_next}"
                )
            blocks.extend([m] * multiplicity)
        return cls(tuple(blocks))

    def e(self, i: int) -> int:
        """Number of blocks of length >= i."""
        return sum(1 for b in self.blocks if b >= i)

    def e_sequence(self) -> tuple[int, ...]:
        return tuple(self.e(i) for i in range(1, self.blocks[0] + 1))

    def conjugate(self) -> Partition:
        return Partition(self.e_sequence())

    @property
    def size(self) -> int:
        return sum(self.blocks)

    @property
    def centralizer_contribution(self) -> int:
        return sum(e * e for e in self.e_sequence())

    def merged(self, other: Partition) -> Partition:
        return Partition(self.blocks + other.blocks)

    def __str__(self) -> str:
        return "[" + ",".join(str(b) for b in self.blocks) + "]"


def _character_name(chi: Character) -> str:
    if chi == TRIVIAL:
        return "1"
    if chi == QUADRATIC:
        return "-1"
    return str(chi)


@dataclass(frozen=True)
class LocalMonodromy:
    """Jordan form at one point: character -> partition.

    Stored as a tuple of (character, partition) pairs sorted by character, so
    instances are hashable and compare by content.
    """

    parts: tuple[tuple[Character, Partition], ...]

    def __post_init__(self) -> None:
        merged: dict[Character, Partition] = {}
        for chi, partition in self.parts:
            chi = Character.parse(chi) if isinstance(chi, str) else chi
            merged[chi] = merged[chi].merged(partition) if chi in merged else partition
        if not merged:
            raise InvalidDataError("local monodromy must have positive degree")
        object.__setattr__(self, "parts", tuple(sorted(merged.items(), key=lambda kv: kv[0])))

    @classmethod
    def from_mapping(cls, mapping: Mapping[Character, Partition | Iterable[int]]) -> LocalMonodromy:
        parts = []
        for chi, blocks in mapping.items():
            partition = blocks if isinstance(blocks, Partition) else Partition(tuple(blocks))
            parts.append((chi, partition))
        return cls(tuple(parts))

    @classmethod
    def unipotent(cls, n: int, chi: Character = TRIVIAL) -> LocalMonodromy:
        """U(n, chi): a single Jordan block of length n."""
        return cls(((chi, Partition.of(n)),))

    @classmethod
    def identity(cls, n: int) -> LocalMonodromy:
        return cls(((TRIVIAL, Partition(tuple([1] * n))),))

    @property
    def mapping(self) -> dict[Character, Partition]:
        return dict(self.parts)

    @property
    def characters(self) -> tuple[Character, ...]:
        return tuple(chi for chi, _ in self.parts)

    @property
    def degree(self) -> int:
        return sum(p.size for _, p in self.parts)

    def partition_at(self, chi: Character) -> Optional[Partition]:
        return self.mapping.get(chi)

    def e(self, chi: Character, i: int) -> int:
        partition = self.partition_at(chi)
        return partition.e(i) if partition else 0

    def e_sequence(self, chi: Character) -> tuple[int, ...]:
        partition = self.partition_at(chi)
        return partition.e_sequence() if partition else ()

    def block_count(self, chi: Character) -> int:
        return self.e(chi, 1)

    def multiplicity(self, chi: Character) -> int:
        """Total block length at chi (algebraic multiplicity of the eigenvalue)."""
        partition = self.partition_at(chi)
        return partition.size if partition else 0

    def eigenvalue_multiset(self) -> Counter:
        return Counter({chi: p.size for chi, p in self.parts})

    @property
    def determinant(self) -> Character:
        total = TRIVIAL
        for chi, partition in self.parts:
            total = total * chi ** partition.size
        return total

    @property
    def is_identity(self) -> bool:
        return len(self.parts) == 1 and self.parts[0][0].is_trivial and self.parts[0][1].blocks[0] == 1

    def twist(self, chi: Character) -> LocalMonodromy:
        """Shift every character key by chi."""
        return LocalMonodromy(tuple((rho * chi, p) for rho, p in self.parts))

    def dual(self) -> LocalMonodromy:
        return LocalMonodromy(tuple((rho.inverse(), p) for rho, p in self.parts))

    def direct_sum(self, other: LocalMonodromy) -> LocalMonodromy:
        return LocalMonodromy(self.parts + other.parts)

    def __iter__(self) -> Iterator[tuple[Character, Partition]]:
        return iter(self.parts)

    def to_dict(self) -> dict:
        return {
            "parts": [
                {"char": str(chi), "blocks": list(partition.blocks)}
                for chi, partition in self.parts
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> LocalMonodromy:
        try:
            raw_parts = data["parts"]
            parts = [
                (Character.parse(entry["char"]), Partition(tuple(entry["blocks"])))
                for entry in raw_parts
            ]
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, InvalidDataError):
                raise
            raise InvalidDataError(f"malformed local monodromy: {e}") from e
        return cls(tuple(parts))

    def __str__(self) -> str:
        pieces = []
        for chi, partition in self.parts:
            name = _character_name(chi)
            for length, count in sorted(Counter(partition.blocks).items(), reverse=True):
                if length == 1:
                    piece = name
                elif chi == TRIVIAL:
                    piece = f"U({length})"
                else:
                    piece = f"U({length},{name})"
                pieces.append(piece if count == 1 else f"{piece}^{count}")
        return " + ".join(pieces)


def direct_sum(*pieces: LocalMonodromy) -> LocalMonodromy:
    parts: tuple = ()
    for piece in pieces:
        parts = parts + piece.parts
    return LocalMonodromy(parts)


def centralizer_dim_gl(m: LocalMonodromy) -> int:
    """Dimension of the centralizer in GL_n: sum over (chi, i) of e_i^2."""
    return sum(partition.centralizer_contribution for _, partition in m.parts)


class Provenance(str, Enum):
    CONSTRUCTED = "constructed"
    USER_SUPPLIED = "user-supplied"


@dataclass(frozen=True)
class FormalLocalSystem:
    """Local data at the finite points alpha_1..alpha_d and at infinity."""

    finite_points: tuple[tuple[str, LocalMonodromy], ...]
    at_infinity: LocalMonodromy
    provenance: Provenance = Provenance.USER_SUPPLIED

    def __post_init__(self) -> None:
        labels = [label for label, _ in self.finite_points]
        if len(set(labels)) != len(labels):
            raise InvalidDataError(f"duplicate finite point labels {labels}")
        if INFINITY in labels:
            raise InvalidDataError(f"'{INFINITY}' is reserved for the point at infinity")
        object.__setattr__(self, "finite_points", tuple(self.finite_points))

    @classmethod
    def of(
        cls,
        finite: Mapping[str, LocalMonodromy],
        infinity: LocalMonodromy,
        provenance: Provenance = Provenance.USER_SUPPLIED,
    ) -> FormalLocalSystem:
        return cls(tuple(finite.items()), infinity, provenance)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.finite_points)

    @property
    def finite(self) -> dict[str, LocalMonodromy]:
        return dict(self.finite_points)

    def monodromy(self, point: str) -> LocalMonodromy:
        if point == INFINITY:
            return self.at_infinity
        try:
            return self.finite[point]
        except KeyError:
            raise InvalidDataError(f"unknown point {point!r}") from None

    def points(self) -> Iterator[tuple[str, LocalMonodromy]]:
        """All points, finite ones first, infinity last."""
        yield from self.finite_points
        yield INFINITY, self.at_infinity

    @property
    def rank(self) -> int:
        return rank(self)

    def with_provenance(self, provenance: Provenance) -> FormalLocalSystem:
        return FormalLocalSystem(self.finite_points, self.at_infinity, provenance)

    def same_local_data(self, other: FormalLocalSystem) -> bool:
        """Equality of local data, ignoring provenance and point order."""
        return self.finite == other.finite and self.at_infinity == other.at_infinity

    def to_dict(self) -> dict:
        return {
            "finite_points": [
                {"label": label, **m.to_dict()} for label, m in self.finite_points
            ],
            "infinity": self.at_infinity.to_dict(),
            "provenance": self.provenance.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> FormalLocalSystem:
        try:
            finite = tuple(
                (str(entry["label"]), LocalMonodromy.from_dict(entry))
                for entry in data["finite_points"]
            )
            infinity = LocalMonodromy.from_dict(data["infinity"])
            provenance = Provenance(data.get("provenance", Provenance.USER_SUPPLIED.value))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, InvalidDataError):
                raise
            raise InvalidDataError(f"malformed local system: {e}") from e
        return cls(finite, infinity, provenance)


@dataclass(frozen=True)
class RankOneSystem:
    """L(chi_1, ..., chi_d): Kummer sheaves at the finite points.

    The character at infinity is the product of the finite ones. All-trivial
    systems are allowed as twist arguments (twisting by them is the identity)
    but have no local system.
    """

    finite_chars: tuple[tuple[str, Character], ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, **chars: Character) -> RankOneSystem:
        return cls(tuple(chars.items()))

    @classmethod
    def pair(cls, chi1: Character, chi2: Character) -> RankOneSystem:
        """L(chi1, chi2) at the points alpha1, alpha2."""
        return cls((("alpha1", chi1), ("alpha2", chi2)))

    @property
    def chars(self) -> dict[str, Character]:
        return dict(self.finite_chars)

    @property
    def at_infinity(self) -> Character:
        total = TRIVIAL
        for _, chi in self.finite_chars:
            total = total * chi
        return total

    @property
    def is_trivial(self) -> bool:
        return all(chi.is_trivial for _, chi in self.finite_chars)

    def dual(self) -> RankOneSystem:
        return RankOneSystem(tuple((label, chi.inverse()) for label, chi in self.finite_chars))

    def as_local_system(self) -> FormalLocalSystem:
        if self.is_trivial:
            raise InvalidDataError("a rank-one system needs at least one nontrivial character")
        finite = tuple(
            (label, LocalMonodromy.unipotent(1, chi)) for label, chi in self.finite_chars
        )
        return FormalLocalSystem(
            finite, LocalMonodromy.unipotent(1, self.at_infinity), Provenance.CONSTRUCTED
        )

    def to_dict(self) -> dict:
        return {"finite_chars": [{"label": label, "char": str(chi)} for label, chi in self.finite_chars]}

    @classmethod
    def from_dict(cls, data: dict) -> RankOneSystem:
        try:
            return cls(
                tuple(
                    (str(entry["label"]), Character.parse(entry["char"]))
                    for entry in data["finite_chars"]
                )
            )
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, InvalidDataError):
                raise
            raise InvalidDataError(f"malformed rank-one system: {e}") from e

    def __str__(self) -> str:
        return "L(" + ", ".join(str(chi) for _, chi in self.finite_chars) + ")"


# Numerology


def validate(system: FormalLocalSystem) -> list[Violation]:
    """Every violated invariant, with the offending point. Empty means valid."""
    violations: list[Violation] = []
    if len(system.finite_points) < 2:
        violations.append(
            Violation("system", f"needs at least two finite points, has {len(system.finite_points)}")
        )
    degrees = {label: m.degree for label, m in system.points()}
    expected = system.at_infinity.degree
    for label, degree in degrees.items():
        if degree != expected:
            violations.append(
                Violation(label, f"degree {degree} differs from degree {expected} at infinity")
            )
    for label, m in system.finite_points:
        if m.is_identity:
            violations.append(Violation(label, "identity local monodromy at a finite point"))
    det_finite = TRIVIAL
    for _, m in system.finite_points:
        det_finite = det_finite * m.determinant
    if det_finite != system.at_infinity.determinant:
        violations.append(
            Violation(
                INFINITY,
                f"determinant {system.at_infinity.determinant} differs from "
                f"product of finite determinants {det_finite}",
            )
        )
    return violations


def require_valid(system: FormalLocalSystem) -> None:
    violations = validate(system)
    if violations:
        raise InvalidDataError("invalid local system", violations)


def rank(system: FormalLocalSystem) -> int:
    degrees = {m.degree for _, m in system.points()}
    if len(degrees) != 1:
        raise InvalidDataError(f"inconsistent degrees {sorted(degrees)}")
    return degrees.pop()


def e(system: FormalLocalSystem, point: str, rho: Character, i: int) -> int:
    if i < 1:
        raise InvalidDataError("e_i is defined for i >= 1")
    return system.monodromy(point).e(rho, i)


def rigidity_index(system: FormalLocalSystem) -> int:
    require_valid(system)
    n = rank(system)
    d = len(system.finite_points)
    return (1 - d) * n * n + sum(centralizer_dim_gl(m) for _, m in system.points())


def euler_characteristic(system: FormalLocalSystem) -> int:
    """Irreducibility requires a value <= 0."""
    require_valid(system)
    n = rank(system)
    d = len(system.finite_points)
    return (1 - d) * n + sum(m.e(TRIVIAL, 1) for _, m in system.points())


def relabel(system: FormalLocalSystem, mapping: Mapping[str, str]) -> FormalLocalSystem:
    finite = tuple((mapping.get(label, label), m) for label, m in system.finite_points)
    return FormalLocalSystem(finite, system.at_infinity, system.provenance)
