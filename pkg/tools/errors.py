"""
Exception hierarchy for the workbench.
Every user-facing failure is a DomainError; the CLI maps the hierarchy to exit codes.
"""
from typing import Optional


class WorkbenchError(Exception):
    """Root of all workbench exceptions."""


class DomainError(WorkbenchError, ValueError):
    """Input or parameter outside the domain of an operation (exit code 1)."""


class PolynomialSyntaxError(DomainError):
    """Polynomial text does not match the grammar."""

    def __init__(
        self,
        message: str,
        position: int,
        line: Optional[int] = None,
        column: Optional[int] = None
    ):
        self.message = message
        self.position = position
        self.line = line
        self.column = column if column is not None else position + 1
        where = f"line {line}, column {self.column}" if line is not None else f"column {self.column}"
        super().__init__(f"{message} ({where})")

    def at_line(self, line: int, offset: int = 0) -> "PolynomialSyntaxError":
        """Re-anchor the error inside a multi-line file."""
        return PolynomialSyntaxError(self.message, self.position, line, self.position + offset + 1)


class UnknownVariableError(DomainError):
    """A variable name that is not part of the ring."""


class ZeroPolynomialError(DomainError):
    """The zero polynomial where a nonzero one is required."""


class NonHomogeneousError(DomainError):
    """Ideal input that is not homogeneous."""


class DimensionMismatchError(DomainError):
    """Vectors, monomials or orders of different lengths."""


class RingMismatchError(DomainError):
    """Polynomials over different variable lists."""


class UnitIdealError(DomainError):
    """Operation undefined for the unit ideal."""


class EmptyConeError(DomainError):
    """A cone (or cone intersection) with empty relative interior."""


class NotAFacetError(DomainError):
    """Vector is not a facet normal of the cone."""


class NotInIdealError(DomainError):
    """A claimed ideal member fails the membership test."""


class NotGeneratingError(DomainError):
    """A candidate set does not generate the ideal."""


class NoWitnessError(DomainError):
    """The initial ideal is monomial-free, so no witness exists."""


class ParameterError(DomainError):
    """Numeric parameters outside the stated domain of a formula."""


class BudgetExceededError(DomainError):
    """A traversal hit its configured ceiling before completing."""


class InputFileError(DomainError):
    """Unreadable or malformed input file."""


class InternalInconsistencyError(WorkbenchError, RuntimeError):
    """Two exact computations disagree; always a bug (exit code 3)."""
