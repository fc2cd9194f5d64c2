"""The Kummer hypersurfaces Hyp(n1, n2) realizing H(phi, eta).

Hyp(n1, n2) is the cyclic cover

    Y^N = prod_(a,i) (X_a - T_i)^e(a,i) * prod_k (X_(k+1) - X_k)^f(k)

over the configuration space of (T1, T2, X1, ..., X7). Its exponent tables
encode the same data as the construction: the twists are
F_a = L(e(a,1)/N, e(a,2)/N) and the convolution characters are f(k)/N, at
phi = n1/N and eta = n2/N. All exponents are reduced into [0, N).
"""

from __future__ import annotations

import logging
from math import lcm

from g2_rigid.chargroup import Character
from g2_rigid.errors import InvalidDataError
from g2_rigid.g2.construction import ConstructionRecipe
from g2_rigid.localdata import RankOneSystem
from g2_rigid.models import Factor, HypEquation, SpecializedEquation

logger = logging.getLogger(__name__)

VARIABLES = 7


def hyp_equation(N: int, n1: int, n2: int) -> HypEquation:
    """Exponent tables of Hyp(n1, n2) for an even N."""
    if N <= 0 or N % 2:
        raise InvalidDataError(f"N must be positive and even, got {N}")
    half = N // 2
    second = {
        1: half + n1 + n2,
        2: half - n1,
        4: half + n1 - n2,
        6: half - n1,
    }
    e = [[half if a % 2 else 0, second.get(a, 0) % N] for a in range(1, VARIABLES + 1)]
    f = [
        value % N
        for value in (
            half - n1 - 2 * n2,
            half + n1 + 2 * n2,
            half - n1 - n2,
            half + n1 + n2,
            half - n1,
            half + n1,
        )
    ]
    return HypEquation(N=N, n1=n1 % N, n2=n2 % N, e=e, f=f)


def hyp_for_characters(phi: Character, eta: Character) -> HypEquation:
    """Hyp(n1, n2) for the smallest even N with phi = n1/N and eta = n2/N."""
    n = lcm(2, phi.order, eta.order)
    return hyp_equation(n, int(phi.value * n), int(eta.value * n))


def recipe_for(h: HypEquation) -> ConstructionRecipe:
    """The construction recipe read off the exponent tables."""
    twists = tuple(
        RankOneSystem.pair(Character.of(h.exponent(a, 1), h.N), Character.of(h.exponent(a, 2), h.N))
        for a in range(1, VARIABLES + 1)
    )
    characters = tuple(Character.of(fk, h.N) for fk in h.f)
    return ConstructionRecipe(Character.of(h.n1, h.N), Character.of(h.n2, h.N), twists, characters)


def _linear(a: int, t: int) -> str:
    if t == 0:
        return f"X{a}"
    return f"X{a}-{t}" if t > 0 else f"X{a}+{-t}"


def specialize_and_render(h: HypEquation, t1: int, t2: int) -> SpecializedEquation:
    """Substitute T1 = t1, T2 = t2; factors with exponent 0 are dropped.

    Factor order is the differences X_(k+1) - X_k, then the T1 factors, then
    the T2 factors.
    """
    if t1 == t2:
        raise InvalidDataError(f"specialization needs t1 != t2, got {t1} twice")
    factors = [
        Factor(poly=f"X{k + 1}-X{k}", exp=exp) for k, exp in enumerate(h.f, start=1) if exp
    ]
    for i, t in ((1, t1), (2, t2)):
        factors.extend(
            Factor(poly=_linear(a, t), exp=h.exponent(a, i))
            for a in range(1, VARIABLES + 1)
            if h.exponent(a, i)
        )

    constraints = [f"X{a} != {t}" for a in range(1, VARIABLES + 1) for t in (t1, t2)]
    constraints += [f"X{k + 1} != X{k}" for k in range(1, VARIABLES)]
    constraints.append("Y != 0")
    equation = SpecializedEquation(N=h.N, factors=factors, constraints=constraints)
    logger.debug("Hyp(%d, %d) mod %d at (%d, %d): %s", h.n1, h.n2, h.N, t1, t2, equation.text)
    return equation
