"""Virtual representations of (tame characters) x SL2.

A local monodromy chi (x) J(n) is the class (chi, [n]): the character times
the n-dimensional irreducible SL2 representation. Exterior powers come from
the Adams operations through the Newton identities

    lambda^2 = (psi^1 * psi^1 - psi^2) / 2
    lambda^3 = (psi^1^3 - 3 psi^1 psi^2 + 2 psi^3) / 6

and the inertia invariants of an actual representation are the number of
summands with trivial character (each [n] has one invariant line under a
unipotent generator).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from g2_rigid.chargroup import TRIVIAL, Character
from g2_rigid.errors import InvalidDataError, NotInG2Error
from g2_rigid.g2.catalog import recognize
from g2_rigid.localdata import LocalMonodromy, Partition

Term = tuple[Character, int]


def _decompose_sl2(weights: Mapping[int, int]) -> dict[int, int]:
    """Decompose an SL2 character (weight -> coefficient) into irreducibles.

    Greedy peeling: the top weight w carries [w + 1] with the coefficient
    found there, which is then subtracted along its whole weight string.
    """
    remaining = {w: c for w, c in weights.items() if c}
    result: dict[int, int] = {}
    while remaining:
        top = max(remaining)
        coeff = remaining[top]
        if top < 0:
            raise ValueError(f"SL2 character is not Weyl-symmetric: {weights}")
        result[top + 1] = result.get(top + 1, 0) + coeff
        for w in range(-top, top + 1, 2):
            remaining[w] = remaining.get(w, 0) - coeff
            if remaining[w] == 0:
                del remaining[w]
    return result


@dataclass(frozen=True)
class RepRingElement:
    """Finite Z-combination of classes (chi, [n]); zero coefficients never stored."""

    terms: tuple[tuple[Term, int], ...] = ()

    def __post_init__(self) -> None:
        collected: dict[Term, int] = defaultdict(int)
        for (chi, n), coeff in self.terms:
            if n < 1:
                raise InvalidDataError(f"SL2 dimension must be positive, got {n}")
            collected[(chi, n)] += coeff
        cleaned = tuple(sorted(((k, v) for k, v in collected.items() if v), key=lambda kv: (kv[0][0], kv[0][1])))
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_terms(cls, terms: Mapping[Term, int] | Iterable[tuple[Term, int]]) -> RepRingElement:
        items = terms.items() if isinstance(terms, Mapping) else terms
        return cls(tuple(items))

    @classmethod
    def basis(cls, chi: Character, n: int, coeff: int = 1) -> RepRingElement:
        return cls((((chi, n), coeff),))

    @classmethod
    def from_local_monodromy(cls, m: LocalMonodromy) -> RepRingElement:
        terms: Counter = Counter()
        for chi, partition in m.parts:
            for block in partition.blocks:
                terms[(chi, block)] += 1
        return cls.from_terms(terms)

    @property
    def as_dict(self) -> dict[Term, int]:
        return dict(self.terms)

    @property
    def dim(self) -> int:
        return sum(n * coeff for (_, n), coeff in self.terms)

    @property
    def is_actual(self) -> bool:
        return all(coeff > 0 for _, coeff in self.terms)

    def __add__(self, other: RepRingElement) -> RepRingElement:
        return RepRingElement(self.terms + other.terms)

    def __neg__(self) -> RepRingElement:
        return RepRingElement(tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other: RepRingElement) -> RepRingElement:
        return self + (-other)

    def scale(self, k: int) -> RepRingElement:
        return RepRingElement(tuple((key, k * v) for key, v in self.terms))

    def divide_exact(self, k: int) -> RepRingElement:
        for _, coeff in self.terms:
            if coeff % k:
                raise ValueError(f"coefficient {coeff} not divisible by {k}")
        return RepRingElement(tuple((key, v // k) for key, v in self.terms))

    def __mul__(self, other: RepRingElement) -> RepRingElement:
        return tensor(self, other)

    def dual(self) -> RepRingElement:
        # SL2 irreducibles are self-dual
        return RepRingElement(tuple(((chi.inverse(), n), v) for (chi, n), v in self.terms))

    def trivial_part(self) -> RepRingElement:
        return RepRingElement(tuple((k, v) for k, v in self.terms if k[0].is_trivial))

    def to_local_monodromy(self) -> LocalMonodromy:
        if not self.is_actual:
            raise InvalidDataError("virtual class has no Jordan form")
        blocks: dict[Character, list[int]] = defaultdict(list)
        for (chi, n), coeff in self.terms:
            blocks[chi].extend([n] * coeff)
        return LocalMonodromy(tuple((chi, Partition(tuple(b))) for chi, b in blocks.items()))

    def dump(self) -> list[str]:
        """Debug listing as "coeff · (char, [n])"."""
        return [f"{coeff} · ({chi}, [{n}])" for (chi, n), coeff in self.terms]

    def __str__(self) -> str:
        return " + ".join(self.dump()) or "0"


def tensor(a: RepRingElement, b: RepRingElement) -> RepRingElement:
    """Bilinear product; Clebsch-Gordan on the SL2 factor."""
    terms: Counter = Counter()
    for (chi, m), u in a.terms:
        for (rho, n), v in b.terms:
            for k in range(min(m, n)):
                terms[(chi * rho, m + n - 1 - 2 * k)] += u * v
    return RepRingElement.from_terms(terms)


def adams(a: RepRingElement, k: int) -> RepRingElement:
    """psi^k: chi -> chi^k, and q -> q^k on the SL2 character."""
    if k < 1:
        raise InvalidDataError("Adams operations need k >= 1")
    terms: Counter = Counter()
    for (chi, n), coeff in a.terms:
        weights = Counter(k * w for w in range(-(n - 1), n, 2))
        for dim, mult in _decompose_sl2(weights).items():
            terms[(chi ** k, dim)] += coeff * mult
    return RepRingElement.from_terms(terms)


def _require_actual(a: RepRingElement, what: str, min_dim: int = 0) -> None:
    if not a.is_actual:
        raise InvalidDataError(f"{what} needs an actual representation, got virtual {a}")
    if a.dim < min_dim:
        raise InvalidDataError(f"{what} needs dimension >= {min_dim}, got {a.dim}")


def lambda2(a: RepRingElement) -> RepRingElement:
    _require_actual(a, "lambda^2", 2)
    return (a * a - adams(a, 2)).divide_exact(2)


def lambda3(a: RepRingElement) -> RepRingElement:
    _require_actual(a, "lambda^3", 3)
    cube = a * a * a
    return (cube - (a * adams(a, 2)).scale(3) + adams(a, 3).scale(2)).divide_exact(6)


def sym2(a: RepRingElement) -> RepRingElement:
    _require_actual(a, "Sym^2")
    return (a * a + adams(a, 2)).divide_exact(2)


def inertia_invariant_dim(a: RepRingElement) -> int:
    """Number of summands with trivial character, counted with multiplicity."""
    _require_actual(a, "invariant dimension")
    return sum(coeff for (chi, _), coeff in a.terms if chi == TRIVIAL)


def g2_centralizer_dim(m: LocalMonodromy) -> int:
    """dim C_G2 = inv(lambda^2 V) - inv(V), from lambda^2 V = V + g2."""
    if m.degree != 7 or recognize(m) is None:
        raise NotInG2Error(f"{m} is not the Jordan form of an element of G2")
    v = RepRingElement.from_local_monodromy(m)
    return inertia_invariant_dim(lambda2(v)) - inertia_invariant_dim(v)
