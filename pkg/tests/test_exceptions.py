"""Tests for custom exceptions."""

import pytest

from pydiscretejordan.exceptions import (
    ComplexError,
    ConstructionConflictError,
    DiscreteTopologyError,
    DocumentError,
    InputError,
    NoCellsError,
    NoDiskError,
    NotInteriorEdgeError,
    PreconditionError,
    StepInvalidError,
    SurfaceConsistencyError,
    UnsupportedInputError,
)


def test_base_exception() -> None:
    """Test base exception."""
    error = DiscreteTopologyError("Test error")
    assert str(error) == "Test error"
    assert isinstance(error, Exception)


@pytest.mark.parametrize(
    "error_class,parent",
    [
        (InputError, DiscreteTopologyError),
        (DocumentError, InputError),
        (UnsupportedInputError, InputError),
        (NotInteriorEdgeError, InputError),
        (ComplexError, DiscreteTopologyError),
        (NoCellsError, ComplexError),
        (NoDiskError, ComplexError),
        (StepInvalidError, DiscreteTopologyError),
        (SurfaceConsistencyError, DiscreteTopologyError),
    ],
)
def test_hierarchy(error_class: type[Exception], parent: type[Exception]) -> None:
    """Test every error derives from its family."""
    assert issubclass(error_class, parent)


def test_document_error_line() -> None:
    """Test document errors carry their line number."""
    error = DocumentError("unknown record 'X'", 4)
    assert error.line == 4
    assert str(error) == "line 4: unknown record 'X'"


def test_document_error_without_line() -> None:
    """Test document errors without a line keep the bare message."""
    error = DocumentError("missing header")
    assert error.line is None
    assert str(error) == "missing header"


def test_precondition_error_lists_violations() -> None:
    """Test every violated precondition is kept."""
    error = PreconditionError(["curve is not closed", "curve has a chord"])
    assert error.violations == ("curve is not closed", "curve has a chord")
    assert str(error) == "curve is not closed; curve has a chord"
    assert isinstance(error, InputError)


def test_construction_conflict_pair() -> None:
    """Test the offending pair of cells is exposed."""
    error = ConstructionConflictError("surface-cell intersection disconnected", (1, 3))
    assert error.pair == (1, 3)
    assert isinstance(error, ComplexError)
