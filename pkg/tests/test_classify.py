"""Tests for curve and point classification."""

import pytest

from pydiscretejordan import (
    CellComplex,
    Graph,
    Side,
    SurfaceRegion,
    VertexPath,
    build_orientation_atlas,
    generate,
    is_discrete_curve,
    is_regular_point,
    is_semi_curve,
    is_simple_surface_point,
    neighborhood,
    side_of,
    two_cell_witness,
)
from pydiscretejordan.classify import contained_cell, union_neighborhood
from pydiscretejordan.exceptions import (
    InputError,
    NoDiskError,
    NotInteriorEdgeError,
    PreconditionError,
    UnsupportedInputError,
)

GRID3_OUTER = ["r0c0", "r0c1", "r0c2", "r1c2", "r2c2", "r2c1", "r2c0", "r1c0"]


def test_semi_and_discrete_curves(grid3: CellComplex) -> None:
    """Test chords and contained cells decide the curve classes."""
    straight = grid3.graph.path(["r0c0", "r0c1", "r0c2"])
    assert is_semi_curve(grid3, straight)
    assert is_discrete_curve(grid3, straight)

    bent = grid3.graph.path(["r0c0", "r0c1", "r1c1", "r1c0"])
    assert not is_semi_curve(grid3, bent)

    square = grid3.cells[0]
    assert is_semi_curve(grid3, square)
    assert contained_cell(grid3, square) == 0
    assert not is_discrete_curve(grid3, square)

    outer = grid3.graph.cycle(GRID3_OUTER)
    assert is_discrete_curve(grid3, outer)
    assert contained_cell(grid3, outer) is None


def test_curve_must_follow_edges(grid3: CellComplex) -> None:
    """Test classification refuses paths that skip an edge."""
    with pytest.raises(InputError):
        is_semi_curve(grid3, VertexPath(("r0c0", "r1c1")))


@pytest.mark.parametrize(
    "kind,params,point,simple",
    [
        ("grid", {"n": 3}, "r1c1", True),
        ("grid", {"n": 3}, "r0c0", False),
        ("cube", {}, "000", True),
        ("octahedron", {}, "xp", True),
        ("torus-grid", {"n": 4}, "r0c0", True),
        ("bowtie", {}, "p", False),
    ],
)
def test_simple_surface_points(
    kind: str, params: dict[str, int], point: str, simple: bool
) -> None:
    """Test inner points with a chordless link are simple surface points."""
    region = generate(kind, **params).build().region()
    assert is_simple_surface_point(region, point) is simple


def test_inner_point_link(grid3_region: SurfaceRegion) -> None:
    """Test the grid centre is ringed by the outer cycle."""
    disk = neighborhood(grid3_region, "r1c1")
    assert disk.regular
    assert disk.cells == (0, 1, 2, 3)
    assert disk.link is not None
    assert disk.link.vertex_set == frozenset(GRID3_OUTER)
    assert disk.chain is None


def test_corner_point_chain(grid3_region: SurfaceRegion) -> None:
    """Test a corner gets an open chain between its boundary neighbours."""
    disk = neighborhood(grid3_region, "r0c0")
    assert disk.link is None
    assert disk.chain is not None
    ring = disk.ring
    assert ring is not None
    assert ring[1] == "r1c1"
    assert {ring[0], ring[-1]} == {"r0c1", "r1c0"}


def test_link_containing_a_cell(grid3: CellComplex) -> None:
    """Test a link that is itself a surface-cell is not a discrete curve."""
    outer = grid3.graph.cycle(GRID3_OUTER)
    covered = CellComplex(grid3.graph, [*grid3.cells, outer])
    region = covered.region()
    assert neighborhood(region, "r1c1").link == outer
    assert not is_simple_surface_point(region, "r1c1")


def test_pinched_point(bowtie: CellComplex) -> None:
    """Test a point where cells meet only at a vertex is irregular."""
    region = bowtie.region()
    assert not is_regular_point(region, "p")
    disk = neighborhood(region, "p")
    assert not disk.regular
    assert disk.ring is None
    assert is_regular_point(region, "a2")


def test_point_without_cells(grid3: CellComplex) -> None:
    """Test points in no cell of the region have no disk."""
    region = grid3.region(["r0c0", "r0c1", "r1c0"])
    assert not is_regular_point(region, "r0c0")
    assert not is_simple_surface_point(region, "r0c0")
    with pytest.raises(NoDiskError):
        neighborhood(region, "r0c0")
    with pytest.raises(InputError, match="not in the region"):
        neighborhood(region, "r2c2")


def test_orientation_atlas(
    grid3_region: SurfaceRegion, cube: CellComplex, moebius: CellComplex
) -> None:
    """Test orientable regions get opposite travels on shared edges."""
    atlas = build_orientation_atlas(grid3_region)
    assert atlas.consistent
    assert atlas.traverses(0, "r0c1", "r1c1") != atlas.traverses(1, "r0c1", "r1c1")

    cube_atlas = build_orientation_atlas(cube.region())
    assert cube_atlas.consistent
    assert len(cube_atlas.travels) == 6

    twisted = build_orientation_atlas(moebius.region())
    assert not twisted.consistent
    assert twisted.conflicts
    assert twisted.to_dict()["consistent"] is False


def test_reversed_atlas(grid3_region: SurfaceRegion) -> None:
    """Test reversing an atlas flips every cell."""
    atlas = build_orientation_atlas(grid3_region)
    flipped = atlas.reversed()
    for cell_id in grid3_region.cells:
        travel = atlas.travel(cell_id)
        assert flipped.traverses(cell_id, travel[1], travel[0])
    with pytest.raises(InputError):
        atlas.travel(9)


def test_sides_across_centre(grid3_region: SurfaceRegion) -> None:
    """Test a curve through the centre puts opposite probes on opposite sides."""
    atlas = build_orientation_atlas(grid3_region)
    disk = neighborhood(grid3_region, "r1c1", atlas)
    through = ("r1c0", "r1c1", "r1c2")
    above = side_of(disk, through, "r0c1")
    below = side_of(disk, through, "r2c1")
    assert {above, below} == {Side.LEFT, Side.RIGHT}
    assert side_of(disk, through, "r0c0") == above
    assert side_of(disk, through, "r1c0") is Side.ON


def test_side_errors(grid3_region: SurfaceRegion, bowtie: CellComplex) -> None:
    """Test side queries need the disk centre and a ring."""
    disk = neighborhood(grid3_region, "r1c1")
    with pytest.raises(InputError):
        side_of(disk, ("r1c0", "r0c1", "r1c2"), "r0c0")
    with pytest.raises(InputError):
        side_of(disk, ("r1c0", "r1c1", "r1c0"), "r0c0")
    pinched = neighborhood(bowtie.region(), "p")
    with pytest.raises(UnsupportedInputError):
        side_of(pinched, ("a1", "p", "b1"), "a3")


def test_two_cell_witness_kinds(grid3_region: SurfaceRegion) -> None:
    """Test the witness for triangles, two cells and a single cell."""
    corner = two_cell_witness(grid3_region, "r0c0")
    assert corner.kind == "single-cell"
    assert corner.cells == (0,)
    with pytest.raises(PreconditionError):
        two_cell_witness(grid3_region, "r0c1")

    triangle = Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    tri = CellComplex(triangle, [triangle.cycle(["a", "b", "c"])])
    assert two_cell_witness(tri.region(), "a").kind == "triangle"

    graph = Graph(
        ["x", "u", "v", "p", "q"],
        [("x", "u"), ("x", "v"), ("u", "p"), ("p", "v"), ("u", "q"), ("q", "v")],
    )
    pair = CellComplex(
        graph, [graph.cycle(["u", "x", "v", "p"]), graph.cycle(["u", "x", "v", "q"])]
    )
    witness = two_cell_witness(pair.region(), "x")
    assert witness.kind == "two-cells"
    assert witness.cells == (0, 1)
    assert witness.to_dict()["neighbors"] == ["u", "v"]


def test_union_neighborhood(grid5_region: SurfaceRegion) -> None:
    """Test merging two inner disks yields a disk bounded by a 10-cycle."""
    atlas = build_orientation_atlas(grid5_region)
    disk = union_neighborhood(grid5_region, ["r1c1", "r1c2"], atlas)
    assert len(disk.cells) == 6
    assert len(disk.boundary) == 10
    assert not disk.boundary.vertex_set & {"r1c1", "r1c2"}
    with pytest.raises(NotInteriorEdgeError):
        union_neighborhood(grid5_region, ["r0c0", "r0c1"], atlas)
