"""Report records shared by the library and the CLI."""

from g2_rigid.models.g2 import (
    ClassificationReport,
    G2ClassInfo,
    InfinityCase,
    RationalClass,
    TripleVerdict,
)
from g2_rigid.models.hyp import Factor, HypEquation, SpecializedEquation
from g2_rigid.models.pointcount import CharacterSumReport
from g2_rigid.models.reduction import DescentReport, DescentStep, ReductionStep, ReductionTrace

__all__ = [
    "ClassificationReport",
    "G2ClassInfo",
    "InfinityCase",
    "RationalClass",
    "TripleVerdict",
    "Factor",
    "HypEquation",
    "SpecializedEquation",
    "CharacterSumReport",
    "DescentReport",
    "DescentStep",
    "ReductionStep",
    "ReductionTrace",
]
