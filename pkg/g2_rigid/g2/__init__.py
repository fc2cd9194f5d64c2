"""G2 classes, the H(phi, eta) construction, classification and rationality."""

from g2_rigid.g2.catalog import (
    TEMPLATES,
    ClassTemplate,
    G2Class,
    enumerate_classes,
    instantiate,
    recognize,
    template,
)
from g2_rigid.g2.classify import classify_profiles, classify_rigid_g2
from g2_rigid.g2.construction import (
    ConstructionRecipe,
    candidate_system,
    condition_violations,
    construct_h,
    infinity_case,
    invert_construction,
    match_row,
    run_recipe,
    table_pairs,
    table_row,
)
from g2_rigid.g2.rationality import (
    RATIONALITY_ROWS,
    enumerate_rational_pairs,
    rationality_row,
    trace_rational_at_infinity,
)

__all__ = [
    "TEMPLATES",
    "ClassTemplate",
    "G2Class",
    "enumerate_classes",
    "instantiate",
    "recognize",
    "template",
    "classify_profiles",
    "classify_rigid_g2",
    "ConstructionRecipe",
    "candidate_system",
    "condition_violations",
    "construct_h",
    "infinity_case",
    "invert_construction",
    "match_row",
    "run_recipe",
    "table_pairs",
    "table_row",
    "RATIONALITY_ROWS",
    "enumerate_rational_pairs",
    "rationality_row",
    "trace_rational_at_infinity",
]
