"""Exceptions for pydiscretejordan."""

__all__ = [
    "DiscreteTopologyError",
    "InputError",
    "DocumentError",
    "PreconditionError",
    "UnsupportedInputError",
    "NotInteriorEdgeError",
    "ComplexError",
    "NoCellsError",
    "ConstructionConflictError",
    "NoDiskError",
    "StepInvalidError",
    "SurfaceConsistencyError",
]


class DiscreteTopologyError(Exception):
    """Base exception for pydiscretejordan errors."""


class InputError(DiscreteTopologyError):
    """Exception raised when input references unknown or malformed data."""


class DocumentError(InputError):
    """Exception raised when a complex document cannot be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        """Initialize the error.

        Args:
            message: Description of the problem.
            line: 1-based line number in the document, if known.
        """
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PreconditionError(InputError):
    """Exception raised when one or more preconditions of an operation fail."""

    def __init__(self, violations: list[str]) -> None:
        """Initialize the error with every violated precondition."""
        self.violations = tuple(violations)
        super().__init__("; ".join(violations))


class UnsupportedInputError(InputError):
    """Exception raised when input lies outside what an algorithm supports."""


class NotInteriorEdgeError(InputError):
    """Exception raised when an edge is not covered by exactly two cells."""


class ComplexError(DiscreteTopologyError):
    """Exception raised when a cell structure is invalid."""


class NoCellsError(ComplexError):
    """Exception raised when a graph has no cycle to build cells from."""


class ConstructionConflictError(ComplexError):
    """Exception raised when the default cell set breaks the intersection rule."""

    def __init__(self, message: str, pair: tuple[int, int]) -> None:
        """Initialize the error with the offending pair of cell indexes."""
        self.pair = pair
        super().__init__(message)


class NoDiskError(ComplexError):
    """Exception raised when a point lies in no surface-cell of a region."""


class StepInvalidError(DiscreteTopologyError):
    """Exception raised when a deformation move does not meet its hypothesis."""


class SurfaceConsistencyError(DiscreteTopologyError):
    """Exception raised when a complex turns out to be malformed mid-computation."""
