"""Records for the Kummer hypersurface family."""

import re
from typing import Optional

from pydantic import BaseModel, Field, computed_field

_FACTOR_RE = re.compile(r"^\(?([^()^]+?)\)?(?:\^(\d+))?$")


class HypEquation(BaseModel):
    """Exponent data of Y^N = prod (X_a - T_i)^e(a,i) prod (X_(k+1) - X_k)^f(k)."""

    N: int
    n1: int  # mod N
    n2: int  # mod N
    e: list[list[int]]  # e[a-1] = [e(a,1), e(a,2)], a = 1..7
    f: list[int]  # f[k-1] = f(k), k = 1..6
    specialization: Optional[tuple[int, int]] = None  # (t1, t2)

    def exponent(self, a: int, i: int) -> int:
        return self.e[a - 1][i - 1]

    def recipe(self):
        """The ConstructionRecipe encoded by the exponent tables."""
        from g2_rigid.motivic import recipe_for

        return recipe_for(self)


class Factor(BaseModel):
    """One factor of the right-hand side."""

    poly: str  # e.g. "X2-X1", "X1", "X1-1"
    exp: int

    def render(self) -> str:
        body = f"({self.poly})" if ("-" in self.poly or "+" in self.poly) else self.poly
        return body if self.exp == 1 else f"{body}^{self.exp}"

    @classmethod
    def parse(cls, text: str) -> "Factor":
        match = _FACTOR_RE.match(text.strip())
        if not match:
            raise ValueError(f"cannot parse factor {text!r}")
        return cls(poly=match.group(1), exp=int(match.group(2) or 1))


class SpecializedEquation(BaseModel):
    """Y^N = product of factors, with its domain constraints."""

    N: int
    factors: list[Factor] = Field(default_factory=list)
    constraints: list[str] = Field(default_factory=list)

    @computed_field
    @property
    def text(self) -> str:
        rhs = "*".join(factor.render() for factor in self.factors) or "1"
        return f"Y^{self.N} = {rhs}"

    @classmethod
    def from_text(cls, text: str, constraints: list[str] | None = None) -> "SpecializedEquation":
        lhs, rhs = (side.strip() for side in text.split("=", 1))
        n = int(lhs.split("^", 1)[1])
        factors = [] if rhs == "1" else [Factor.parse(piece) for piece in rhs.split("*")]
        return cls(N=n, factors=factors, constraints=list(constraints or []))
