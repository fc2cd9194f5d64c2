"""Records for reduction traces and construction descents."""

from typing import Literal, Optional

from pydantic import BaseModel, Field, computed_field


class ReductionStep(BaseModel):
    """One twist-then-convolve step of a Katz reduction."""

    twist: dict[str, str]  # finite point label -> "p/q"
    chi: str  # convolution character
    rank_after: int


class ReductionTrace(BaseModel):
    """Outcome of katz_reduce."""

    initial_rank: int
    steps: list[ReductionStep] = Field(default_factory=list)
    outcome: Literal["rigid-reducible", "irreducible-rigid-unreachable", "degenerate"]
    message: Optional[str] = None
    final: dict  # last local system reached, FormalLocalSystem.to_dict()

    @computed_field
    @property
    def rank_sequence(self) -> list[int]:
        return [self.initial_rank] + [step.rank_after for step in self.steps]


class DescentStep(BaseModel):
    """State after undoing construction step i."""

    step: int  # i, counting down from 6
    rank: int
    rigidity: int
    euler: int


class DescentReport(BaseModel):
    """Outcome of inverting the construction on a rank-7 candidate."""

    phi: str
    eta: str
    steps: list[DescentStep] = Field(default_factory=list)
    outcome: Literal["clean", "contradiction"]
    failed_step: Optional[int] = None
    reason: Optional[str] = None

    @computed_field
    @property
    def ranks(self) -> list[int]:
        return [s.rank for s in self.steps]
