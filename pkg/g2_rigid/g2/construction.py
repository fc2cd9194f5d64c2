"""The rank-7 G2 system H(phi, eta) built by six twist-and-convolve steps.

Starting from the rank-one system H0 = F1, each step is

    H_i = mt(mc(H_(i-1), rho_i), F_(i+1))

with rank-one twists F1..F7 and characters rho_1..rho_6 depending on
(phi, eta). The rank grows by one per step; H6 has rank 7 with local
monodromy (-1)^4 + 1^3 at alpha1, U(3) + U(2)^2 at alpha2, and at infinity
one of five G2 classes selected by (phi, eta).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from g2_rigid.chargroup import QUADRATIC, TRIVIAL, Character, characters_of_order_dividing
from g2_rigid.convolution import mc, mt
from g2_rigid.errors import ConditionViolatedError, G2RigidError, InternalConsistencyError, InvalidDataError
from g2_rigid.g2.catalog import G2Class, template
from g2_rigid.localdata import (
    FormalLocalSystem,
    LocalMonodromy,
    Provenance,
    RankOneSystem,
    euler_characteristic,
    rank,
    rigidity_index,
)
from g2_rigid.models import DescentReport, DescentStep, InfinityCase

logger = logging.getLogger(__name__)

HALF = QUADRATIC

ALPHA1_MONODROMY = LocalMonodromy.from_mapping({HALF: (1, 1, 1, 1), TRIVIAL: (1, 1, 1)})
ALPHA2_MONODROMY = LocalMonodromy.from_mapping({TRIVIAL: (3, 2, 2)})


@dataclass(frozen=True)
class ConstructionRecipe:
    """Twists F1..F7 and convolution characters rho_1..rho_6."""

    phi: Character
    eta: Character
    twists: tuple[RankOneSystem, ...]
    characters: tuple[Character, ...]

    @classmethod
    def for_pair(cls, phi: Character, eta: Character) -> ConstructionRecipe:
        f1 = RankOneSystem.pair(HALF, HALF * phi * eta)
        f2 = RankOneSystem.pair(TRIVIAL, HALF / phi)
        f3 = RankOneSystem.pair(HALF, TRIVIAL)
        f4 = RankOneSystem.pair(TRIVIAL, HALF * phi / eta)
        eta2 = eta ** 2
        characters = (
            HALF / (phi * eta2),
            HALF * phi * eta2,
            HALF / (phi * eta),
            HALF * phi * eta,
            HALF / phi,
            HALF * phi,
        )
        return cls(phi, eta, (f1, f2, f3, f4, f3, f2, f3), characters)

    def twist(self, index: int) -> RankOneSystem:
        """F_index, 1-based."""
        return self.twists[index - 1]

    def character(self, index: int) -> Character:
        """rho_index, 1-based."""
        return self.characters[index - 1]


def run_recipe(recipe: ConstructionRecipe) -> list[FormalLocalSystem]:
    """H0..H6 without checking any table condition."""
    systems = [recipe.twist(1).as_local_system()]
    for i in range(1, 7):
        convolved = mc(systems[-1], recipe.character(i))
        systems.append(mt(convolved, recipe.twist(i + 1)))
        logger.debug("H%d: rank %d", i, rank(systems[-1]))
    return systems


def _products(phi: Character, eta: Character) -> list[tuple[str, Character]]:
    return [
        ("phi", phi),
        ("eta", eta),
        ("phi*eta", phi * eta),
        ("phi*eta^2", phi * eta ** 2),
        ("eta*phi^2", eta * phi ** 2),
        ("phi/eta", phi / eta),
    ]


def condition_violations(phi: Character, eta: Character) -> list[str]:
    """Names of the products that equal -1."""
    return [name for name, value in _products(phi, eta) if value == HALF]


def _kills(chi: Character, k: int) -> bool:
    return (chi ** k).is_trivial


def _seven_distinct(phi: Character, eta: Character) -> bool:
    chars = {TRIVIAL, phi, phi.inverse(), eta, eta.inverse(), phi * eta, (phi * eta).inverse()}
    return len(chars) == 7


def match_row(phi: Character, eta: Character) -> Optional[tuple[int, G2Class]]:
    """Table row at infinity, checked in order; None when no row applies."""
    if phi.is_trivial and eta.is_trivial:
        tpl = template(5)
        return 1, G2Class(tpl, (), tpl.instantiate())
    if phi == eta and phi.order == 3:
        tpl = template(12)
        return 2, G2Class(tpl, (phi,), tpl.instantiate(phi))
    if phi == eta and not _kills(phi, 4) and not _kills(phi, 6):
        tpl = template(18)
        return 3, G2Class(tpl, (phi,), tpl.instantiate(phi))
    if eta == phi.inverse() and not _kills(phi, 4):
        tpl = template(19)
        return 4, G2Class(tpl, (phi,), tpl.instantiate(phi))
    if _seven_distinct(phi, eta):
        tpl = template(20)
        return 5, G2Class(tpl, (phi, eta), tpl.instantiate(phi, eta))
    return None


def _case_record(
    phi: Character, eta: Character, case: int, cls: G2Class, reason: Optional[str] = None
) -> InfinityCase:
    return InfinityCase(
        phi=str(phi),
        eta=str(eta),
        case=case,
        label=cls.describe(),
        expected=cls.monodromy.to_dict(),
        flagged=reason is not None,
        reason=reason,
    )


def infinity_case(phi: Character, eta: Character) -> InfinityCase:
    """Row of the infinity table for (phi, eta).

    Pairs for which no rigid system exists (Case 3 with phi of order 6,
    Case 4 with phi of order 4, and degenerate Case 5 pairs) come back
    flagged instead of raising.
    """
    matched = match_row(phi, eta)
    if matched is not None:
        case, cls = matched
        if case == 5:
            bad = [name for name in ("phi/eta", "phi*eta^2", "eta*phi^2") if name in condition_violations(phi, eta)]
            if bad:
                return _case_record(phi, eta, case, cls, f"{', '.join(bad)} = -1")
        return _case_record(phi, eta, case, cls)

    if phi == eta and phi.order == 6:
        tpl = template(18)
        return _case_record(phi, eta, 3, G2Class(tpl, (phi,), tpl.instantiate(phi)), "phi of order 6")
    if eta == phi.inverse() and phi.order == 4:
        tpl = template(19)
        return _case_record(phi, eta, 4, G2Class(tpl, (phi,), tpl.instantiate(phi)), "phi of order 4")

    violated = condition_violations(phi, eta)
    if violated:
        raise ConditionViolatedError(
            f"(phi, eta) = ({phi}, {eta}): {', '.join(violated)} = -1", violated
        )
    raise ConditionViolatedError(f"(phi, eta) = ({phi}, {eta}) is outside the infinity table")


def table_row(phi: Character, eta: Character) -> Optional[InfinityCase]:
    """infinity_case, or None for pairs outside the table."""
    try:
        return infinity_case(phi, eta)
    except ConditionViolatedError:
        return None


def table_pairs(bound: int) -> list[tuple[Character, Character, InfinityCase]]:
    """All table pairs with characters of order dividing bound, flagged ones included."""
    grid = characters_of_order_dividing(bound)
    pairs = []
    for phi in grid:
        for eta in grid:
            case = table_row(phi, eta)
            if case is not None:
                pairs.append((phi, eta, case))
    return pairs


def construct_h(phi: Character, eta: Character) -> list[FormalLocalSystem]:
    """H0..H6 for an admissible (phi, eta)."""
    violated = condition_violations(phi, eta)
    if violated:
        raise ConditionViolatedError(
            f"condition violated for (phi, eta) = ({phi}, {eta}): "
            + ", ".join(f"{name} = -1" for name in violated),
            violated,
        )
    case = infinity_case(phi, eta)
    if case.flagged:
        raise ConditionViolatedError(f"no rigid system for ({phi}, {eta}): {case.reason}")

    systems = run_recipe(ConstructionRecipe.for_pair(phi, eta))
    h6 = systems[-1]
    expected = {
        "alpha1": ALPHA1_MONODROMY,
        "alpha2": ALPHA2_MONODROMY,
        "infinity": LocalMonodromy.from_dict(case.expected),
    }
    for point, m in h6.points():
        if m != expected[point]:
            raise InternalConsistencyError(f"H6 at {point} is {m}, expected {expected[point]}")
    logger.info("constructed H(%s, %s), case %d", phi, eta, case.case)
    return systems


def candidate_system(phi: Character, eta: Character) -> FormalLocalSystem:
    """Rank-7 local data the construction would produce for (phi, eta).

    Flagged pairs are allowed; this is the input for invert_construction.
    """
    case = infinity_case(phi, eta)
    return FormalLocalSystem(
        (("alpha1", ALPHA1_MONODROMY), ("alpha2", ALPHA2_MONODROMY)),
        LocalMonodromy.from_dict(case.expected),
        Provenance.USER_SUPPLIED,
    )


def invert_construction(system: FormalLocalSystem, phi: Character, eta: Character) -> DescentReport:
    """Undo the six steps on a rank-7 system, stopping at the first contradiction."""
    if rank(system) != 7:
        raise InvalidDataError(f"descent needs rank 7, got {rank(system)}")
    recipe = ConstructionRecipe.for_pair(phi, eta)
    steps: list[DescentStep] = []

    def contradiction(step: int, reason: str) -> DescentReport:
        logger.debug("descent for (%s, %s) fails at step %d: %s", phi, eta, step, reason)
        return DescentReport(
            phi=str(phi), eta=str(eta), steps=steps, outcome="contradiction",
            failed_step=step, reason=reason,
        )

    current = system
    for i in range(6, 0, -1):
        try:
            current = mc(mt(current, recipe.twist(i + 1).dual()), recipe.character(i).inverse())
            rig = rigidity_index(current)
            euler = euler_characteristic(current)
        except G2RigidError as exc:
            return contradiction(i, str(exc))
        steps.append(DescentStep(step=i, rank=rank(current), rigidity=rig, euler=euler))
        if rig != 2:
            return contradiction(i, f"rigidity index {rig}")
        if euler > 0:
            return contradiction(i, f"Euler characteristic {euler} > 0")

    if not current.same_local_data(recipe.twist(1).as_local_system()):
        return contradiction(1, f"descent ends at {current.to_dict()}, not at {recipe.twist(1)}")
    return DescentReport(phi=str(phi), eta=str(eta), steps=steps, outcome="clean")
