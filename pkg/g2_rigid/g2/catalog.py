"""Jordan forms of elements of G2 inside GL7, stored as data.

Every semisimple element of G2 is conjugate to diag(x, y, xy, 1, (xy)^-1,
y^-1, x^-1); the table lists the 20 resulting Jordan forms with the
centralizer dimensions in G2 and in GL7. Characters are written additively:
a component (coeffs, offset, blocks) has character sum(c_j * p_j) + offset at
parameters p.

A parameter choice is admissible for a row when the row's condition holds
and the instantiated form really has the row's GL7 centralizer dimension; the
second test rules out coincidences the row conditions leave implicit
(x of order 3 in row 18 merges into row 11).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from g2_rigid.chargroup import Character, characters_of_order_dividing
from g2_rigid.errors import InvalidDataError
from g2_rigid.localdata import LocalMonodromy, Partition, centralizer_dim_gl
from g2_rigid.models import G2ClassInfo

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Component:
    coeffs: tuple[int, ...]  # one per parameter symbol
    offset: Fraction
    blocks: tuple[int, ...]

    def character(self, params: tuple[Character, ...]) -> Character:
        value = self.offset + sum((c * p.value for c, p in zip(self.coeffs, params)), Fraction(0))
        return Character(value)


@dataclass(frozen=True)
class ClassTemplate:
    """One row of the table."""

    template_id: int
    label: str
    dim_c_g2: int
    dim_c_gl7: int
    symbols: tuple[str, ...]
    components: tuple[Component, ...]
    condition: Optional[Callable[..., bool]] = None
    condition_text: str = ""

    @property
    def arity(self) -> int:
        return len(self.symbols)

    def instantiate(self, *params: Character) -> LocalMonodromy:
        if len(params) != self.arity:
            raise InvalidDataError(f"row {self.template_id} takes {self.arity} parameters")
        return LocalMonodromy(
            tuple((comp.character(params), Partition(comp.blocks)) for comp in self.components)
        )

    def admissible(self, *params: Character) -> bool:
        if self.condition is not None and not self.condition(*params):
            return False
        return centralizer_dim_gl(self.instantiate(*params)) == self.dim_c_gl7

    def info(self, *params: Character) -> G2ClassInfo:
        return G2ClassInfo(
            template_id=self.template_id,
            label=self.label,
            parameters={s: str(p) for s, p in zip(self.symbols, params)},
            dim_c_g2=self.dim_c_g2,
            dim_c_gl7=self.dim_c_gl7,
        )


def _c(blocks: tuple[int, ...], *coeffs: int, offset: Fraction = Fraction(0)) -> Component:
    return Component(tuple(coeffs), offset, blocks)


def _order(p: Character, n: int) -> bool:
    return p.order == n


def _kills(p: Character, k: int) -> bool:
    return (p ** k).is_trivial


def _pairwise_distinct(x: Character, y: Character) -> bool:
    chars = [x, y, x * y, (x * y).inverse(), y.inverse(), x.inverse(), Character.of(0)]
    return len(set(chars)) == 7


ONES = (1,)

TEMPLATES: tuple[ClassTemplate, ...] = (
    ClassTemplate(1, "E7", 14, 49, (), (_c((1,) * 7),)),
    ClassTemplate(2, "(J(2),J(2),E3)", 8, 29, (), (_c((2, 2, 1, 1, 1)),)),
    ClassTemplate(3, "(J(3),J(2),J(2))", 6, 19, (), (_c((3, 2, 2)),)),
    ClassTemplate(4, "(J(3),J(3),1)", 4, 17, (), (_c((3, 3, 1)),)),
    ClassTemplate(5, "J(7)", 2, 7, (), (_c((7,)),)),
    ClassTemplate(6, "(-E4,E3)", 6, 25, (), (_c((1, 1, 1, 1), offset=HALF), _c((1, 1, 1)))),
    ClassTemplate(7, "(-J(2),-J(2),E3)", 4, 17, (), (_c((2, 2), offset=HALF), _c((1, 1, 1)))),
    ClassTemplate(8, "(-J(2),-J(2),J(3))", 4, 11, (), (_c((2, 2), offset=HALF), _c((3,)))),
    ClassTemplate(9, "(-J(3),-1,J(3))", 2, 9, (), (_c((3, 1), offset=HALF), _c((3,)))),
    ClassTemplate(
        10, "(εE3,1,ε^-1E3)", 8, 19, ("ε",),
        (_c((1, 1, 1), 1), _c((1, 1, 1), -1), _c(ONES, 0)),
        lambda e: _order(e, 3), "ε of order 3",
    ),
    ClassTemplate(
        11, "(εJ(2),ε^-1J(2),ε,ε^-1,1)", 4, 11, ("ε",),
        (_c((2, 1), 1), _c((2, 1), -1), _c(ONES, 0)),
        lambda e: _order(e, 3), "ε of order 3",
    ),
    ClassTemplate(
        12, "(εJ(3),ε^-1J(3),1)", 2, 7, ("ε",),
        (_c((3,), 1), _c((3,), -1), _c(ONES, 0)),
        lambda e: _order(e, 3), "ε of order 3",
    ),
    ClassTemplate(
        13, "(i,i,-1,1,i^-1,i^-1,-1)", 4, 13, ("i",),
        (_c((1, 1), 1), _c((1, 1), -1), _c((1, 1), 0, offset=HALF), _c(ONES, 0)),
        lambda i: _order(i, 4), "i of order 4",
    ),
    ClassTemplate(
        14, "(iJ(2),i^-1J(2),-1,-1,1)", 2, 9, ("i",),
        (_c((2,), 1), _c((2,), -1), _c((1, 1), 0, offset=HALF), _c(ONES, 0)),
        lambda i: _order(i, 4), "i of order 4",
    ),
    ClassTemplate(
        15, "(x,x,x^-1,x^-1,1,1,1)", 4, 17, ("x",),
        (_c((1, 1), 1), _c((1, 1), -1), _c((1, 1, 1), 0)),
        lambda x: not _kills(x, 2), "x^2 != 1",
    ),
    ClassTemplate(
        16, "(x,x,x^2,1,x^-1,x^-1,x^-2)", 4, 11, ("x",),
        (_c((1, 1), 1), _c((1, 1), -1), _c(ONES, 2), _c(ONES, -2), _c(ONES, 0)),
        lambda x: not _kills(x, 4) and not _kills(x, 3), "x^4 != 1 != x^3",
    ),
    ClassTemplate(
        17, "(x,-1,-x,1,-x^-1,-1,x^-1)", 2, 9, ("x",),
        (
            _c(ONES, 1), _c(ONES, -1), _c(ONES, 1, offset=HALF), _c(ONES, -1, offset=HALF),
            _c((1, 1), 0, offset=HALF), _c(ONES, 0),
        ),
        lambda x: not _kills(x, 4), "x^4 != 1",
    ),
    ClassTemplate(
        18, "(xJ(2),x^-1J(2),x^2,x^-2,1)", 2, 7, ("x",),
        (_c((2,), 1), _c((2,), -1), _c(ONES, 2), _c(ONES, -2), _c(ONES, 0)),
        lambda x: not _kills(x, 4), "x^4 != 1",
    ),
    ClassTemplate(
        19, "(xJ(2),x^-1J(2),J(3))", 2, 7, ("x",),
        (_c((2,), 1), _c((2,), -1), _c((3,), 0)),
        lambda x: not _kills(x, 2), "x^2 != 1",
    ),
    ClassTemplate(
        20, "(x,y,xy,1,(xy)^-1,y^-1,x^-1)", 2, 7, ("x", "y"),
        (
            _c(ONES, 1, 0), _c(ONES, 0, 1), _c(ONES, 1, 1), _c(ONES, -1, -1),
            _c(ONES, 0, -1), _c(ONES, -1, 0), _c(ONES, 0, 0),
        ),
        _pairwise_distinct, "x, y, xy, 1, (xy)^-1, y^-1, x^-1 pairwise different",
    ),
)

TEMPLATES_BY_ID = {t.template_id: t for t in TEMPLATES}


def template(template_id: int) -> ClassTemplate:
    try:
        return TEMPLATES_BY_ID[template_id]
    except KeyError:
        raise InvalidDataError(f"no class template {template_id}") from None


def instantiate(template_id: int, *params: Character) -> LocalMonodromy:
    tpl = template(template_id)
    if not tpl.admissible(*params):
        raise InvalidDataError(
            f"parameters {[str(p) for p in params]} not admissible for row {template_id} "
            f"({tpl.condition_text or 'no condition'})"
        )
    return tpl.instantiate(*params)


def recognize(m: LocalMonodromy) -> Optional[G2ClassInfo]:
    """Row and canonical (smallest) parameters of m, or None when m is not in G2."""
    if m.degree != 7:
        raise InvalidDataError(f"G2 recognition needs degree 7, got {m.degree}")
    candidates = sorted(m.characters)
    for tpl in TEMPLATES:
        for params in itertools.product(candidates, repeat=tpl.arity):
            if tpl.admissible(*params) and tpl.instantiate(*params) == m:
                return tpl.info(*params)
    return None


@dataclass(frozen=True)
class G2Class:
    """A concrete class: row plus canonical parameters."""

    template: ClassTemplate
    params: tuple[Character, ...]
    monodromy: LocalMonodromy

    @property
    def dim_c_g2(self) -> int:
        return self.template.dim_c_g2

    @property
    def dim_c_gl7(self) -> int:
        return self.template.dim_c_gl7

    def describe(self) -> str:
        if not self.params:
            return self.template.label
        assigned = ",".join(f"{s}={p}" for s, p in zip(self.template.symbols, self.params))
        return f"{self.template.label}[{assigned}]"


def enumerate_classes(bound: int) -> list[G2Class]:
    """All classes whose characters have order dividing bound, deduplicated."""
    grid = characters_of_order_dividing(bound)
    seen: dict[LocalMonodromy, G2Class] = {}
    for tpl in TEMPLATES:
        for params in itertools.product(grid, repeat=tpl.arity):
            if not tpl.admissible(*params):
                continue
            m = tpl.instantiate(*params)
            if m not in seen:
                seen[m] = G2Class(tpl, params, m)
    return list(seen.values())
