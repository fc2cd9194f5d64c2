"""Records for G2 recognition, classification and rationality."""

from typing import Optional

from pydantic import BaseModel, Field, computed_field


class G2ClassInfo(BaseModel):
    """A recognized row of the G2 class table with its parameters."""

    template_id: int  # 1..20, table order
    label: str  # e.g. "(-E4,E3)"
    parameters: dict[str, str] = Field(default_factory=dict)  # "x"/"y" -> "p/q"
    dim_c_g2: int
    dim_c_gl7: int


class InfinityCase(BaseModel):
    """Row of the infinity table selected by (phi, eta)."""

    phi: str
    eta: str
    case: int  # 1..5
    label: str
    expected: dict  # LocalMonodromy.to_dict() of the expected class
    flagged: bool = False  # no rigid system exists for this pair
    reason: Optional[str] = None


class TripleVerdict(BaseModel):
    """Classification status of one concrete triple of classes."""

    profile: list[int]
    classes: list[str]
    status: str  # "survives" | "excluded:<rule>" | "unresolved"
    detail: Optional[str] = None


class ClassificationReport(BaseModel):
    """Result of classify_rigid_g2."""

    bound: int
    finite_points: int
    profiles: list[list[int]]
    verdicts: list[TripleVerdict] = Field(default_factory=list)

    @computed_field
    @property
    def status_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for verdict in self.verdicts:
            counts[verdict.status] = counts.get(verdict.status, 0) + 1
        return dict(sorted(counts.items()))

    def survivors(self) -> list[TripleVerdict]:
        return [v for v in self.verdicts if v.status == "survives"]

    def for_profile(self, profile: list[int] | tuple[int, ...]) -> list[TripleVerdict]:
        return [v for v in self.verdicts if v.profile == list(profile)]


class RationalClass(BaseModel):
    """An infinity class with rational trace and a representative pair."""

    phi: str
    eta: str
    case: int
    row: Optional[str] = None  # matching row of the rationality table
    constructible: bool  # construct_h accepts the pair
    infinity: dict  # LocalMonodromy.to_dict()
    pair_count: int  # table pairs within the bound giving this class
