"""Exception hierarchy.

Every error raised by the package derives from G2RigidError and carries the
process exit code the CLI uses for it:

    2  invalid input data (bad characters, malformed or invalid local systems)
    3  a mathematical precondition fails (trivial convolution character,
       degenerate convolution, violated construction conditions, ...)
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One violated invariant of a local system."""

    point: str  # finite point label, "infinity" or "system"
    message: str

    def __str__(self) -> str:
        return f"{self.point}: {self.message}"


class G2RigidError(Exception):
    """Base class for all package errors."""

    exit_code: int = 1


class InvalidDataError(G2RigidError, ValueError):
    """Input data is malformed or violates a type invariant."""

    exit_code = 2

    def __init__(self, message: str, violations: list[Violation] | None = None):
        self.violations = list(violations or [])
        if self.violations:
            details = "; ".join(str(v) for v in self.violations)
            message = f"{message}: {details}"
        super().__init__(message)


class MathPreconditionError(G2RigidError):
    """A mathematical precondition of an operation does not hold."""

    exit_code = 3


class InvalidCharacterError(MathPreconditionError):
    """The convolution character is trivial."""


class DegenerateConvolutionError(MathPreconditionError):
    """The middle convolution would have rank <= 0."""


class InternalConsistencyError(MathPreconditionError):
    """Reconstructed data is inconsistent (negative multiplicity, degree mismatch, ...)."""


class ConditionViolatedError(MathPreconditionError):
    """(phi, eta) violates the conditions of the construction."""

    def __init__(self, message: str, products: list[str] | None = None):
        self.products = list(products or [])
        super().__init__(message)


class NotInG2Error(MathPreconditionError):
    """A local monodromy is not the Jordan form of an element of G2."""
