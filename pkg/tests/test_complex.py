"""Tests for surface-cells, 3-cells, regions and boundaries."""

from itertools import combinations

import pytest

from pydiscretejordan import (
    CellComplex,
    Graph,
    SurfaceRegion,
    default_u2,
    generate,
    validate_u2,
)
from pydiscretejordan.exceptions import ComplexError, InputError, NoCellsError
from pydiscretejordan.models import VertexCycle

GRID3_OUTER = ["r0c0", "r0c1", "r0c2", "r1c2", "r2c2", "r2c1", "r2c0", "r1c0"]


def _brute_force_default(graph: Graph) -> set[VertexCycle]:
    """Girth cycles plus, per uncovered vertex, its shortest chordless cycles."""
    cycles = graph.minimal_cycles()
    girth = min(len(c) for c in cycles)
    chosen = {c for c in cycles if len(c) == girth}
    covered = {v for c in chosen for v in c.vertex_set}
    for vertex in graph.vertices:
        if vertex in covered:
            continue
        through = [c for c in cycles if vertex in c.vertex_set]
        if through:
            shortest = min(len(c) for c in through)
            chosen |= {c for c in through if len(c) == shortest}
    return chosen


@pytest.mark.parametrize(
    "kind,params,count",
    [("grid", {"n": 3}, 4), ("cube", {}, 6), ("octahedron", {}, 8)],
)
def test_default_cells_match_brute_force(
    kind: str, params: dict[str, int], count: int
) -> None:
    """Test the default construction against a direct enumeration."""
    graph = generate(kind, **params).build_graph()
    cells = default_u2(graph)
    assert len(cells) == count
    assert set(cells) == _brute_force_default(graph)


def test_default_cells_cover_pendant_cycle() -> None:
    """Test uncovered vertices pull in their own shortest chordless cycles."""
    graph = Graph(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("c", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "g"),
            ("g", "d"),
        ],
    )
    cells = default_u2(graph)
    assert [len(c) for c in cells] == [3, 4]
    assert set(cells) == _brute_force_default(graph)


@pytest.mark.timeout(10)
def test_default_cells_ignore_pendant_vertex() -> None:
    """Test a vertex on no cycle stays uncovered without a full search."""
    grid = generate("grid", n=6).build_graph()
    tailed = Graph([*grid.vertices, "tail"], [*grid.edges, ("r0c0", "tail")])
    cells = default_u2(tailed)
    assert cells == default_u2(grid)
    assert len(cells) == 25
    assert all("tail" not in c.vertex_set for c in cells)


def test_default_cells_need_a_cycle() -> None:
    """Test acyclic graphs cannot receive cells."""
    tree = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    with pytest.raises(NoCellsError):
        default_u2(tree)


def test_validate_rejects_chorded_cell() -> None:
    """Test a cell with a chord is reported by rule name."""
    graph = Graph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")],
    )
    report = validate_u2(graph, [graph.cycle(["a", "b", "c", "d"])])
    assert not report.passed
    assert report.describe() == "surface-cell is not a minimal cycle: cell #0"


def test_validate_rejects_disconnected_intersection() -> None:
    """Test two cells meeting in two separate points are rejected."""
    graph = Graph(
        ["a", "b", "c", "d", "e", "f"],
        [
            ("a", "b"),
            ("b", "c"),
            ("c", "d"),
            ("d", "a"),
            ("a", "e"),
            ("e", "c"),
            ("c", "f"),
            ("f", "a"),
        ],
    )
    first = graph.cycle(["a", "b", "c", "d"])
    second = graph.cycle(["a", "b", "c", "e"])
    assert validate_u2(graph, [first, second]).passed
    third = graph.cycle(["a", "b", "c", "d"])
    fourth = graph.cycle(["a", "e", "c", "f"])
    report = validate_u2(graph, [third, fourth])
    assert not report.passed
    assert report.violations[0].rule == "surface-cell intersection disconnected"
    with pytest.raises(ComplexError, match="intersection disconnected"):
        CellComplex(graph, [third, fourth])


def test_complex_indexes_cells(grid3: CellComplex) -> None:
    """Test cell ids follow the sorted order and the incidence indexes."""
    assert len(grid3.cells) == 4
    assert grid3.cells_containing("r1c1") == (0, 1, 2, 3)
    assert grid3.cells_containing("r0c0") == (0,)
    cell = grid3.graph.cycle(["r0c0", "r0c1", "r1c1", "r1c0"])
    assert grid3.cell_id(cell) == 0
    with pytest.raises(InputError):
        grid3.cell_id(grid3.graph.cycle(GRID3_OUTER))


@pytest.mark.parametrize(
    "kind,params,closed,boundary_size",
    [
        ("grid", {"n": 3}, False, 8),
        ("cube", {}, True, 0),
        ("octahedron", {}, True, 0),
        ("torus-grid", {"n": 4}, True, 0),
        ("moebius-strip", {"length": 5}, False, 10),
        ("bowtie", {}, False, 7),
    ],
)
def test_fixture_surfaces(
    kind: str, params: dict[str, int], closed: bool, boundary_size: int
) -> None:
    """Test every fixture is a semi-surface with the expected boundary."""
    region = generate(kind, **params).build().region()
    assert region.is_semi_surface()
    assert region.is_discrete_surface()
    assert region.is_closed_semi_surface() is closed
    assert len(region.boundary()) == boundary_size


def test_grid_boundary(grid3_region: SurfaceRegion) -> None:
    """Test the grid boundary is everything but the centre."""
    assert "r1c1" not in grid3_region.boundary()
    assert grid3_region.sorted_boundary()[0] == "r0c0"


@pytest.mark.parametrize(
    "kind,params",
    [
        ("grid", {"n": 3}),
        ("cube", {}),
        ("octahedron", {}),
        ("torus-grid", {"n": 4}),
        ("moebius-strip", {"length": 5}),
        ("bowtie", {}),
    ],
)
def test_closed_exactly_when_boundary_empty(
    kind: str, params: dict[str, int]
) -> None:
    """Test closedness and empty boundary agree on regions missing cells."""
    cx = generate(kind, **params).build()
    ids = range(len(cx.cells))
    for size in range(3):
        for gone in combinations(ids, size):
            keep = [i for i in ids if i not in gone]
            if not keep:
                continue
            region = SurfaceRegion.from_cells(cx, keep)
            if not region.is_semi_surface():
                continue
            assert region.is_closed_semi_surface() == (not region.boundary())


def test_region_rejects_unknown_cells(grid3: CellComplex) -> None:
    """Test explicit cell regions only accept existing cell ids."""
    with pytest.raises(InputError):
        SurfaceRegion.from_cells(grid3, [7])


def test_boundary_requires_semi_surface() -> None:
    """Test boundaries are undefined where an edge lies in three cells."""
    graph = Graph(
        ["a", "b", "c", "d", "e"],
        [
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("a", "d"),
            ("b", "d"),
            ("a", "e"),
            ("b", "e"),
        ],
    )
    triangles = (["a", "b", "c"], ["a", "b", "d"], ["a", "b", "e"])
    cells = [graph.cycle(t) for t in triangles]
    region = CellComplex(graph, cells).region()
    assert not region.is_semi_surface()
    with pytest.raises(InputError, match="not a semi-surface"):
        region.boundary()


def test_line_connected_cells(
    grid3_region: SurfaceRegion, bowtie: CellComplex
) -> None:
    """Test edge sharing decides line connectivity."""
    assert grid3_region.cells_line_connected([0, 1, 3, 2])
    assert not grid3_region.cells_line_connected([0, 3])
    assert not bowtie.region().cells_line_connected([0, 1])


def test_cube_as_three_cell(cube: CellComplex) -> None:
    """Test the whole cube surface is accepted as a 3-cell."""
    cx = CellComplex(cube.graph, cube.cells, [cube.graph.vertices])
    assert cx.u3 == (frozenset(cube.graph.vertices),)
    assert not cx.region().is_discrete_surface()


def test_three_cell_must_be_closed(grid3: CellComplex) -> None:
    """Test an open surface is refused as a 3-cell."""
    with pytest.raises(InputError, match="closed semi-surface"):
        CellComplex(grid3.graph, grid3.cells, [grid3.graph.vertices])
