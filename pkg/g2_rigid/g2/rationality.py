"""Rationality of the trace of the local monodromy at infinity.

The trace of a semisimplified local monodromy is a sum of roots of unity; it
lies in Q exactly when every Galois conjugate of an eigenvalue occurs with the
same multiplicity.
"""

from __future__ import annotations

import logging
from typing import Callable

from g2_rigid.chargroup import QUADRATIC, Character
from g2_rigid.g2.construction import condition_violations, infinity_case, match_row
from g2_rigid.localdata import LocalMonodromy
from g2_rigid.models import RationalClass

logger = logging.getLogger(__name__)

Predicate = Callable[[Character, Character], bool]

RATIONALITY_ROWS: tuple[tuple[str, Predicate], ...] = (
    ("U(7)", lambda phi, eta: phi.is_trivial and eta.is_trivial),
    ("phi of order 3", lambda phi, eta: phi == eta and phi.order == 3),
    ("phi of order 3 or 6, eta = phi^-1", lambda phi, eta: eta == phi.inverse() and phi.order in (3, 6)),
    ("phi of order 7 or 14, eta = phi^2", lambda phi, eta: eta == phi ** 2 and phi.order in (7, 14)),
    ("phi of order 8, eta = phi^2", lambda phi, eta: eta == phi ** 2 and phi.order == 8),
    ("phi of order 12, eta = -phi", lambda phi, eta: eta == phi * QUADRATIC and phi.order == 12),
)


def trace_rational_at_infinity(m: LocalMonodromy) -> bool:
    """True iff the multiplicity of each character is constant on its Galois orbit."""
    for chi in m.characters:
        mult = m.multiplicity(chi)
        if any(m.multiplicity(conj) != mult for conj in chi.galois_orbit()):
            return False
    return True


def rationality_row(phi: Character, eta: Character) -> tuple[int, str] | None:
    for index, (name, predicate) in enumerate(RATIONALITY_ROWS):
        if predicate(phi, eta):
            return index, name
    return None


def _characters_up_to(max_order: int) -> list[Character]:
    return sorted({Character.of(k, n) for n in range(1, max_order + 1) for k in range(n)})


def enumerate_rational_pairs(max_order: int) -> list[RationalClass]:
    """Infinity classes of table pairs with orders <= max_order whose trace is rational.

    Pairs are grouped by their class at infinity. The representative is the
    first pair in rationality-row order, or the smallest pair when no row
    matches.
    """
    grid = _characters_up_to(max_order)
    groups: dict[LocalMonodromy, list[tuple[Character, Character, int]]] = {}
    for phi in grid:
        for eta in grid:
            matched = match_row(phi, eta)
            if matched is None:
                continue
            case, cls = matched
            if trace_rational_at_infinity(cls.monodromy):
                groups.setdefault(cls.monodromy, []).append((phi, eta, case))

    classes = []
    for m, pairs in groups.items():
        def rank_key(item: tuple[Character, Character, int]):
            row = rationality_row(item[0], item[1])
            return (row[0] if row else len(RATIONALITY_ROWS), item[0], item[1])

        phi, eta, case = min(pairs, key=rank_key)
        row = rationality_row(phi, eta)
        constructible = not condition_violations(phi, eta) and not infinity_case(phi, eta).flagged
        classes.append(
            RationalClass(
                phi=str(phi),
                eta=str(eta),
                case=case,
                row=row[1] if row else None,
                constructible=constructible,
                infinity=m.to_dict(),
                pair_count=len(pairs),
            )
        )
        if row is None:
            logger.warning("rational class at (%s, %s) matches no rationality row", phi, eta)

    classes.sort(key=lambda c: (Character.parse(c.phi), Character.parse(c.eta)))
    logger.info("%d rational classes up to order %d", len(classes), max_order)
    return classes
