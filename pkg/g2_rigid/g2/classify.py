"""Search for rigid G2 systems with prescribed local classes.

A rigid rank-7 system on P^1 minus d+1 points satisfies
sum of dim C_GL7 = 2 + (d - 1) * 49 over its local classes, which leaves a
short list of centralizer profiles. Each concrete choice of classes is then
run through a chain of filters:

    quadratic-twist  some twist by +-1 makes the Euler characteristic positive
    twist            same with all twists of order dividing the bound
    adjoint          (1 - d) * 14 + sum of dim C_G2 > 0
    inversion        the remaining (25, 19, 7) candidates must survive undoing
                     the construction for every table pair with that class
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from g2_rigid.chargroup import QUADRATIC, TRIVIAL, Character, characters_of_order_dividing
from g2_rigid.errors import InvalidDataError
from g2_rigid.g2.catalog import TEMPLATES, G2Class, enumerate_classes
from g2_rigid.g2.construction import candidate_system, invert_construction, table_pairs
from g2_rigid.localdata import LocalMonodromy
from g2_rigid.models import ClassificationReport, TripleVerdict

logger = logging.getLogger(__name__)

RANK = 7
GL_DIM = RANK * RANK
G2_DIM = 14

# rows of the residual shape: involution class, unipotent class, regular class
INVOLUTION_ROW = 6
UNIPOTENT_ROW = 3


def _gl_values() -> list[int]:
    # the identity class is never a local monodromy of an irreducible system
    return sorted({t.dim_c_gl7 for t in TEMPLATES if t.dim_c_gl7 != GL_DIM}, reverse=True)


def classify_profiles(finite_points: int = 2) -> list[tuple[int, ...]]:
    """Multisets of d+1 GL7 centralizer dimensions adding up to 2 + (d-1)*49."""
    if finite_points < 2:
        raise InvalidDataError("need at least two finite points")
    target = 2 + (finite_points - 1) * GL_DIM
    profiles = [
        combo
        for combo in itertools.combinations_with_replacement(_gl_values(), finite_points + 1)
        if sum(combo) == target
    ]
    return sorted(profiles, reverse=True)


def _twisted_euler(classes: tuple[G2Class, ...], twists: tuple[Character, ...]) -> int:
    d = len(classes) - 1
    total = (1 - d) * RANK
    for cls, t in zip(classes, twists):
        total += cls.monodromy.e(t.inverse(), 1)
    return total


def _find_twist(
    classes: tuple[G2Class, ...], grid: list[Character]
) -> Optional[tuple[tuple[Character, ...], int]]:
    """A twist (t_1..t_d, t_1*...*t_d) with positive Euler characteristic, if any."""
    d = len(classes) - 1
    for finite in itertools.product(grid, repeat=d):
        t_inf = TRIVIAL
        for t in finite:
            t_inf = t_inf * t
        twists = finite + (t_inf,)
        euler = _twisted_euler(classes, twists)
        if euler > 0:
            return twists, euler
    return None


def _is_residual(classes: tuple[G2Class, ...]) -> bool:
    rows = sorted(cls.template.template_id for cls in classes if cls.dim_c_gl7 != 7)
    dims = sorted((cls.dim_c_gl7 for cls in classes), reverse=True)
    return dims == [25, 19, 7] and rows == [UNIPOTENT_ROW, INVOLUTION_ROW]


class _Classifier:
    """Holds the per-bound data shared by all profiles."""

    def __init__(self, bound: int, finite_points: int):
        self.bound = bound
        self.finite_points = finite_points
        self.grid = characters_of_order_dividing(bound)
        self.quadratic = [TRIVIAL, QUADRATIC]
        self.by_dim: dict[int, list[G2Class]] = defaultdict(list)
        for cls in enumerate_classes(bound):
            self.by_dim[cls.dim_c_gl7].append(cls)
        self.pairs_by_class: dict[LocalMonodromy, list[tuple[Character, Character]]] = defaultdict(list)
        if finite_points == 2:
            for phi, eta, case in table_pairs(bound):
                self.pairs_by_class[LocalMonodromy.from_dict(case.expected)].append((phi, eta))

    def tuples(self, profile: tuple[int, ...]):
        groups = [(value, len(list(run))) for value, run in itertools.groupby(profile)]
        choices = [
            list(itertools.combinations_with_replacement(self.by_dim[value], count))
            for value, count in groups
        ]
        for combo in itertools.product(*choices):
            yield tuple(cls for group in combo for cls in group)

    def verdict(self, profile: tuple[int, ...], classes: tuple[G2Class, ...]) -> TripleVerdict:
        def record(status: str, detail: Optional[str] = None) -> TripleVerdict:
            return TripleVerdict(
                profile=list(profile),
                classes=[cls.describe() for cls in classes],
                status=status,
                detail=detail,
            )

        d = len(classes) - 1
        for status, grid in (("excluded:quadratic-twist", self.quadratic), ("excluded:twist", self.grid)):
            found = _find_twist(classes, grid)
            if found is not None:
                twists, euler = found
                return record(status, f"twist ({', '.join(map(str, twists))}) gives Euler characteristic {euler}")

        adjoint = (1 - d) * G2_DIM + sum(cls.dim_c_g2 for cls in classes)
        if adjoint > 0:
            return record("excluded:adjoint", f"adjoint Euler characteristic {adjoint}")

        if d == 2 and _is_residual(classes):
            regular = next(cls for cls in classes if cls.dim_c_gl7 == 7)
            pairs = self.pairs_by_class.get(regular.monodromy, [])
            if not pairs:
                return record("unresolved", "no construction pair has this class at infinity")
            for phi, eta in pairs:
                report = invert_construction(candidate_system(phi, eta), phi, eta)
                if report.outcome == "contradiction":
                    return record(
                        "excluded:inversion",
                        f"(phi, eta) = ({phi}, {eta}): step {report.failed_step}: {report.reason}",
                    )
            return record("survives", f"{len(pairs)} construction pair(s) descend cleanly")

        return record("unresolved")

    def run_profile(self, profile: tuple[int, ...]) -> list[TripleVerdict]:
        verdicts = [self.verdict(profile, classes) for classes in self.tuples(profile)]
        logger.debug("profile %s: %d class tuples", profile, len(verdicts))
        return verdicts


def classify_rigid_g2(bound: int, finite_points: int = 2, workers: int = 1) -> ClassificationReport:
    """Run every class tuple of every profile through the exclusion filters."""
    if bound < 1:
        raise InvalidDataError("order bound must be positive")
    profiles = classify_profiles(finite_points)
    classifier = _Classifier(bound, finite_points)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        results = list(executor.map(classifier.run_profile, profiles))

    report = ClassificationReport(
        bound=bound,
        finite_points=finite_points,
        profiles=[list(p) for p in profiles],
        verdicts=[v for verdicts in results for v in verdicts],
    )
    logger.info("classification at bound %d: %s", bound, report.status_counts)
    return report
