"""Tests for pydiscretejordan models."""

import pytest

from pydiscretejordan.exceptions import InputError
from pydiscretejordan.models import (
    Budget,
    Orientation,
    VertexCycle,
    VertexPath,
    make_edge,
    parse_vertex_list,
)

ORDER = {name: n for n, name in enumerate("abcdef")}


@pytest.mark.parametrize(
    "sequence",
    [
        ("a", "b", "c", "d"),
        ("c", "d", "a", "b"),
        ("d", "c", "b", "a"),
        ("b", "a", "d", "c"),
    ],
)
def test_cycle_canonical_form(sequence: tuple[str, ...]) -> None:
    """Test rotations and reversals share one canonical form."""
    cycle = VertexCycle.from_sequence(sequence, ORDER.__getitem__)
    assert cycle.canonical == ("a", "b", "c", "d")
    assert cycle == VertexCycle(("a", "b", "c", "d"))


def test_cycle_keeps_travel_direction() -> None:
    """Test a reversed travel is remembered as the opposite orientation."""
    cycle = VertexCycle.from_sequence(("a", "d", "c", "b"), ORDER.__getitem__)
    assert cycle.orientation is Orientation.CCW
    assert cycle.vertices == ("a", "d", "c", "b")
    assert cycle.traverses("a", "d")
    assert not cycle.traverses("a", "b")
    assert cycle.reversed().vertices == ("a", "b", "c", "d")


def test_cycle_navigation() -> None:
    """Test successor and predecessor wrap around."""
    cycle = VertexCycle(("a", "b", "c"))
    assert cycle.successor("c") == "a"
    assert cycle.predecessor("a") == "c"
    assert cycle.edge_set() == {
        make_edge("a", "b"),
        make_edge("b", "c"),
        make_edge("c", "a"),
    }
    assert cycle.as_path() == VertexPath(("a", "b", "c"), closed=True)


@pytest.mark.parametrize(
    "canonical",
    [("a", "b"), ("a", "b", "a")],
)
def test_cycle_rejects_bad_sequences(canonical: tuple[str, ...]) -> None:
    """Test short or repeating cycles are rejected."""
    with pytest.raises(InputError):
        VertexCycle(canonical)


def test_path_ends_and_edges() -> None:
    """Test open paths expose their ends and edges in order."""
    path = VertexPath(("a", "b", "c"))
    assert path.ends == ("a", "c")
    assert path.edges() == (make_edge("a", "b"), make_edge("b", "c"))
    assert path.successor("c") is None
    assert path.predecessor("a") is None
    assert path.reversed().vertices == ("c", "b", "a")


def test_point_path() -> None:
    """Test a single vertex is a point without edges."""
    point = VertexPath(("a",))
    assert point.is_point
    assert point.edges() == ()
    assert point.ends == ("a", "a")


def test_closed_path_has_no_ends() -> None:
    """Test closed paths report no ends and include the closing edge."""
    path = VertexPath(("a", "b", "c"), closed=True)
    assert path.ends is None
    assert make_edge("c", "a") in path.edge_set()


@pytest.mark.parametrize(
    "vertices,closed",
    [((), False), (("a", "b", "a"), False), (("a", "b"), True)],
)
def test_path_validation(vertices: tuple[str, ...], closed: bool) -> None:
    """Test empty, repeating and too-short closed paths are rejected."""
    with pytest.raises(InputError):
        VertexPath(vertices, closed)


def test_parse_vertex_list() -> None:
    """Test comma-separated vertex lists."""
    assert parse_vertex_list("a,b, c") == ("a", "b", "c")
    with pytest.raises(InputError):
        parse_vertex_list("a,,b")


def test_budget_round_trip() -> None:
    """Test budgets load from dictionaries with defaults."""
    budget = Budget.from_dict({"max_steps": 5})
    assert budget.max_steps == 5
    assert budget.max_cycle_len == Budget().max_cycle_len
    assert Budget.from_dict(budget.to_dict()) == budget


@pytest.mark.parametrize(
    "max_cycle_len,max_steps",
    [(2, 5), (4, 0)],
)
def test_budget_validation(max_cycle_len: int, max_steps: int) -> None:
    """Test budgets reject impossible bounds."""
    with pytest.raises(InputError):
        Budget(max_cycle_len=max_cycle_len, max_steps=max_steps)
