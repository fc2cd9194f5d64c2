"""Rigid local systems with monodromy group G2.

Local data, middle convolution and middle tensor, the construction of the
rank-7 systems H(phi, eta), their classification, and the Kummer
hypersurfaces that realize them.
"""

from g2_rigid.chargroup import QUADRATIC, TRIVIAL, Character
from g2_rigid.convolution import katz_reduce, mc, mt
from g2_rigid.errors import (
    ConditionViolatedError,
    DegenerateConvolutionError,
    G2RigidError,
    InternalConsistencyError,
    InvalidCharacterError,
    InvalidDataError,
    MathPreconditionError,
    NotInG2Error,
)
from g2_rigid.localdata import (
    FormalLocalSystem,
    LocalMonodromy,
    Partition,
    RankOneSystem,
    euler_characteristic,
    rigidity_index,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "QUADRATIC",
    "TRIVIAL",
    "Character",
    "katz_reduce",
    "mc",
    "mt",
    "ConditionViolatedError",
    "DegenerateConvolutionError",
    "G2RigidError",
    "InternalConsistencyError",
    "InvalidCharacterError",
    "InvalidDataError",
    "MathPreconditionError",
    "NotInG2Error",
    "FormalLocalSystem",
    "LocalMonodromy",
    "Partition",
    "RankOneSystem",
    "euler_characteristic",
    "rigidity_index",
    "validate",
]
