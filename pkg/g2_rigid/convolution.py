"""Middle convolution and middle tensor on local data, plus Katz reduction.

mc(F, chi) transforms the e-data of F point by point:

    finite s:  rho not in {1, chi^-1}  ->  rho*chi, same partition
               chi^-1 blocks of length m  ->  1-blocks of length m + 1
               1-blocks of length m       ->  chi-blocks of length m - 1
    infinity:  rho not in {1, chi^-1}  ->  rho*chi, same partition
               1-blocks of length m       ->  chi-blocks of length m + 1
               chi^-1 blocks of length m  ->  1-blocks of length m - 1

with the lengths of the new length-1 e-values fixed by the rank formula
n' = sum_s (n - e_1(s, 1)) - e_1(infinity, chi^-1).
"""

from __future__ import annotations

import logging
from typing import Optional

from g2_rigid.chargroup import QUADRATIC, TRIVIAL, Character
from g2_rigid.errors import (
    DegenerateConvolutionError,
    G2RigidError,
    InternalConsistencyError,
    InvalidCharacterError,
    InvalidDataError,
)
from g2_rigid.localdata import (
    FormalLocalSystem,
    LocalMonodromy,
    Partition,
    Provenance,
    RankOneSystem,
    rank,
    require_valid,
)
from g2_rigid.models import ReductionStep, ReductionTrace

logger = logging.getLogger(__name__)


def _shifted_parts(m: LocalMonodromy, chi: Character) -> list[tuple[Character, Partition]]:
    chi_bar = chi.inverse()
    return [(rho * chi, p) for rho, p in m.parts if rho not in (TRIVIAL, chi_bar)]


def _assemble(
    parts: list[tuple[Character, Partition]],
    extra: list[tuple[Character, Optional[Partition]]],
    point: str,
    expected_degree: int,
) -> LocalMonodromy:
    for chi, partition in extra:
        if partition is not None:
            parts.append((chi, partition))
    if not parts:
        raise InternalConsistencyError(f"{point}: convolution left no Jordan blocks")
    m = LocalMonodromy(tuple(parts))
    if m.degree != expected_degree:
        raise InternalConsistencyError(
            f"{point}: degree {m.degree} after convolution, expected {expected_degree}"
        )
    return m


def _convolve_finite(m: LocalMonodromy, chi: Character, n: int, new_rank: int, point: str) -> LocalMonodromy:
    chi_bar = chi.inverse()
    trivial_seq = (new_rank - n + m.e(TRIVIAL, 1),) + m.e_sequence(chi_bar)
    chi_seq = m.e_sequence(TRIVIAL)[1:]
    if trivial_seq[0] < 0:
        raise InternalConsistencyError(f"{point}: negative e_1 at the trivial character")
    return _assemble(
        _shifted_parts(m, chi),
        [
            (TRIVIAL, Partition.from_e_sequence(trivial_seq)),
            (chi, Partition.from_e_sequence(chi_seq)),
        ],
        point,
        new_rank,
    )


def _convolve_infinity(m: LocalMonodromy, chi: Character, n: int, total_drop: int, new_rank: int) -> LocalMonodromy:
    chi_bar = chi.inverse()
    chi_seq = (total_drop - n,) + m.e_sequence(TRIVIAL)
    trivial_seq = m.e_sequence(chi_bar)[1:]
    if chi_seq[0] < 0:
        raise InternalConsistencyError("infinity: negative e_1 at the convolution character")
    return _assemble(
        _shifted_parts(m, chi),
        [
            (chi, Partition.from_e_sequence(chi_seq)),
            (TRIVIAL, Partition.from_e_sequence(trivial_seq)),
        ],
        "infinity",
        new_rank,
    )


def convolved_rank(system: FormalLocalSystem, chi: Character) -> int:
    """n' = sum_s (n - e_1(s, 1)) - e_1(infinity, chi^-1)."""
    n = rank(system)
    total_drop = sum(n - m.e(TRIVIAL, 1) for _, m in system.finite_points)
    return total_drop - system.at_infinity.e(chi.inverse(), 1)


def mc(system: FormalLocalSystem, chi: Character) -> FormalLocalSystem:
    """Middle convolution MC_chi on local data."""
    if chi.is_trivial:
        raise InvalidCharacterError("middle convolution needs a nontrivial character")
    require_valid(system)
    n = rank(system)
    total_drop = sum(n - m.e(TRIVIAL, 1) for _, m in system.finite_points)
    new_rank = total_drop - system.at_infinity.e(chi.inverse(), 1)
    if new_rank <= 0:
        raise DegenerateConvolutionError(f"mc with chi = {chi} has rank {new_rank}")

    finite = tuple(
        (label, _convolve_finite(m, chi, n, new_rank, label))
        for label, m in system.finite_points
    )
    infinity = _convolve_infinity(system.at_infinity, chi, n, total_drop, new_rank)
    logger.debug("mc chi=%s: rank %d -> %d", chi, n, new_rank)
    return FormalLocalSystem(finite, infinity, Provenance.CONSTRUCTED)


def mt(system: FormalLocalSystem, twist: RankOneSystem) -> FormalLocalSystem:
    """Middle tensor with a rank-one system: shift characters pointwise."""
    labels = set(system.labels)
    unknown = [label for label, _ in twist.finite_chars if label not in labels]
    if unknown:
        raise InvalidDataError(f"twist has points {unknown} that the system does not have")
    chars = twist.chars
    finite = tuple(
        (label, m.twist(chars.get(label, TRIVIAL))) for label, m in system.finite_points
    )
    infinity = system.at_infinity.twist(twist.at_infinity)
    return FormalLocalSystem(finite, infinity, system.provenance)


def mc_involution_check(system: FormalLocalSystem, chi: Character) -> bool:
    """True iff mc(mc(F, chi), chi^-1) has the local data of F."""
    back = mc(mc(system, chi), chi.inverse())
    return back.same_local_data(system)


# Katz reduction


def _dominant_character(m: LocalMonodromy) -> Character:
    # largest e_1, ties to the smallest fraction
    return min(m.characters, key=lambda chi: (-m.e(chi, 1), chi))


def _reduction_step(system: FormalLocalSystem) -> tuple[RankOneSystem, Character, FormalLocalSystem]:
    twist = RankOneSystem(
        tuple(
            (label, _dominant_character(m).inverse()) for label, m in system.finite_points
        )
    )
    twisted = mt(system, twist)
    candidates = {chi for _, m in twisted.points() for chi in m.characters}
    candidates.add(QUADRATIC)
    candidates.discard(TRIVIAL)
    rho = min(candidates, key=lambda c: (-twisted.at_infinity.e(c, 1), c))
    return twist, rho.inverse(), twisted


def katz_reduce(system: FormalLocalSystem, max_steps: int = 64) -> ReductionTrace:
    """Greedy twist-and-convolve descent towards rank one."""
    require_valid(system)
    current = system
    steps: list[ReductionStep] = []
    outcome = "rigid-reducible"
    message: Optional[str] = None

    while rank(current) > 1:
        if len(steps) >= max_steps:
            outcome, message = "irreducible-rigid-unreachable", f"stopped after {max_steps} steps"
            break
        n = rank(current)
        twist, chi, twisted = _reduction_step(current)
        try:
            new_rank = convolved_rank(twisted, chi)
            if new_rank >= n:
                outcome = "irreducible-rigid-unreachable"
                message = f"best convolution (chi = {chi}) gives rank {new_rank} >= {n}"
                logger.warning("reduction stalls at rank %d", n)
                break
            current = mc(twisted, chi)
        except G2RigidError as exc:
            outcome, message = "degenerate", str(exc)
            break
        steps.append(
            ReductionStep(
                twist={label: str(c) for label, c in twist.finite_chars},
                chi=str(chi),
                rank_after=rank(current),
            )
        )
        logger.debug("reduction step %d: rank %d -> %d", len(steps), n, rank(current))

    return ReductionTrace(
        initial_rank=rank(system),
        steps=steps,
        outcome=outcome,
        message=message,
        final=current.to_dict(),
    )
