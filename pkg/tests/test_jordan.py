"""Tests for curve separation and the exhaustive separation suite."""

import logging

import pytest

from pydiscretejordan import (
    CellComplex,
    SeparationMode,
    SurfaceRegion,
    build_orientation_atlas,
    exhaustive_jordan_suite,
    oracle_separation,
    separation_check,
)
from pydiscretejordan.exceptions import PreconditionError, UnsupportedInputError
from pydiscretejordan.jordan import AugmentedIncidence, cell_node, flanking_cells
from pydiscretejordan.models import SideLabel, VertexPath

GRID3_OUTER = ["r0c0", "r0c1", "r0c2", "r1c2", "r2c2", "r2c1", "r2c0", "r1c0"]
GRID5_SQUARE = ["r1c1", "r1c2", "r2c2", "r2c1"]
GRID5_RING = [
    "r1c1",
    "r1c2",
    "r1c3",
    "r2c3",
    "r3c3",
    "r3c2",
    "r3c1",
    "r2c1",
]
CUBE_HEXAGON = ["001", "011", "010", "110", "100", "101"]
OCTAHEDRON_EQUATOR = ["yp", "zp", "yn", "zn"]
TORUS_MERIDIAN = ["r0c0", "r0c1", "r0c2", "r0c3"]


def test_unit_square_splits_off_its_cell(grid5_region: SurfaceRegion) -> None:
    """Test a cell boundary isolates the cell's central point."""
    report = separation_check(grid5_region, GRID5_SQUARE)
    assert report.count == 2
    assert report.holds
    assert report.oracle_agrees
    inner = report.components[1]
    assert len(inner.members) == 1
    assert inner.members[0].startswith("cell:")
    assert {c.label for c in report.components} == {
        SideLabel.A_SIDE,
        SideLabel.B_SIDE,
    }


@pytest.mark.parametrize("mode", list(SeparationMode))
def test_ring_separates_in_both_modes(
    grid5_region: SurfaceRegion, mode: SeparationMode
) -> None:
    """Test the ring around the centre cuts it off from the rim."""
    report = separation_check(grid5_region, GRID5_RING, mode)
    assert report.count == 2
    assert report.holds
    assert not report.flank_violations
    assert report.oracle_agrees
    if mode is SeparationMode.STRICT:
        assert report.components[1].members == ("r2c2",)


@pytest.mark.parametrize("mode", list(SeparationMode))
@pytest.mark.parametrize(
    "fixture_name,curve",
    [("cube", CUBE_HEXAGON), ("octahedron", OCTAHEDRON_EQUATOR)],
)
def test_closed_surfaces_separate(
    request: pytest.FixtureRequest,
    fixture_name: str,
    curve: list[str],
    mode: SeparationMode,
) -> None:
    """Test belts around closed simply connected surfaces split them in two."""
    cx: CellComplex = request.getfixturevalue(fixture_name)
    report = separation_check(cx.region(), curve, mode)
    assert report.count == 2
    assert report.holds
    assert report.oracle_agrees


def test_torus_meridian_does_not_separate(torus4: CellComplex) -> None:
    """Test a meridian leaves the torus connected with both flanks together."""
    report = separation_check(torus4.region(), TORUS_MERIDIAN)
    assert report.count == 1
    assert report.components[0].label is SideLabel.BOTH
    assert not report.holds
    assert report.flank_violations
    assert report.oracle_agrees
    assert report.to_dict()["holds"] is False


def test_oracle_counts(cube: CellComplex, torus4: CellComplex) -> None:
    """Test the flood-fill oracle on its own."""
    hexagon = cube.graph.cycle(CUBE_HEXAGON)
    assert oracle_separation(cube.region(), hexagon, SeparationMode.STRICT) == 2
    meridian = torus4.graph.cycle(TORUS_MERIDIAN)
    assert oracle_separation(torus4.region(), meridian) == 1


def test_boundary_curve_is_refused(grid3_region: SurfaceRegion) -> None:
    """Test curves on the boundary fail the preconditions."""
    with pytest.raises(PreconditionError, match="touches the boundary"):
        separation_check(grid3_region, GRID3_OUTER)


@pytest.mark.parametrize(
    "curve,message",
    [
        (["r1c1", "r1c2", "r1c1"], "not simple"),
        (["r1c1", "r1c2"], "fewer than 3"),
        (
            ["r1c1", "r1c2", "r1c3", "r2c3", "r2c2", "r2c1"],
            "chord",
        ),
    ],
)
def test_preconditions(
    grid5_region: SurfaceRegion, curve: list[str], message: str
) -> None:
    """Test each unmet precondition is named."""
    with pytest.raises(PreconditionError, match=message):
        separation_check(grid5_region, curve)


def test_open_path_is_refused(grid5_region: SurfaceRegion) -> None:
    """Test an open path is not a closed curve."""
    path = grid5_region.graph.path(["r1c1", "r1c2", "r2c2"])
    with pytest.raises(PreconditionError) as err:
        separation_check(grid5_region, path)
    assert "curve is not closed" in err.value.violations


def test_strict_mode_refuses_cell_boundary(grid5_region: SurfaceRegion) -> None:
    """Test strict separation needs a curve that holds no cell."""
    with pytest.raises(PreconditionError, match="contains surface-cell"):
        separation_check(grid5_region, GRID5_SQUARE, SeparationMode.STRICT)


def test_inconsistent_atlas_is_refused(
    grid5_region: SurfaceRegion, moebius: CellComplex
) -> None:
    """Test flank sides are only computed under a consistent orientation."""
    twisted = build_orientation_atlas(moebius.region())
    with pytest.raises(UnsupportedInputError, match="orientable"):
        separation_check(grid5_region, GRID5_SQUARE, atlas=twisted)


def test_flanking_cells_are_opposite(grid5_region: SurfaceRegion) -> None:
    """Test every curve edge has one cell on each side."""
    atlas = build_orientation_atlas(grid5_region)
    cycle = grid5_region.graph.cycle(GRID5_RING)
    flanks = flanking_cells(grid5_region, cycle, atlas)
    assert len(flanks) == 8
    for flank in flanks:
        assert flank.a_side != flank.b_side
        assert atlas.traverses(flank.a_side, flank.start, flank.end)
    inner_cells = {f.a_side for f in flanks} | {f.b_side for f in flanks}
    assert len(inner_cells) == 12


def test_incidence_structure(grid3_region: SurfaceRegion) -> None:
    """Test pseudo mode adds a point per cell and per edge."""
    pseudo = AugmentedIncidence(grid3_region, SeparationMode.PSEUDO)
    assert pseudo.structure.number_of_nodes() == 9 + 4 + 12
    assert pseudo.structure.degree(cell_node(0)) == 8
    strict = AugmentedIncidence(grid3_region, SeparationMode.STRICT)
    assert strict.structure.number_of_nodes() == 9
    assert strict.structure.number_of_edges() == 12
    removed = pseudo.removed_nodes(VertexPath(("r0c0", "r0c1")))
    assert removed == {"r0c0", "r0c1", "edge:r0c0-r0c1"}


def test_suite_on_grid(grid5_region: SurfaceRegion) -> None:
    """Test every inner curve of the 5x5 grid separates."""
    suite = exhaustive_jordan_suite(grid5_region)
    assert len(suite.outcomes) == 5
    assert suite.skipped == 0
    assert suite.all_hold
    assert suite.histogram == {2: 5}
    assert suite.non_separating == ()


def test_strict_suite_skips_cell_boundaries(grid5_region: SurfaceRegion) -> None:
    """Test strict runs skip curves that contain a cell."""
    suite = exhaustive_jordan_suite(grid5_region, mode=SeparationMode.STRICT)
    assert len(suite.outcomes) == 1
    assert suite.skipped == 4
    assert suite.all_hold
    assert suite.to_dict()["curves"] == 1


def test_suite_on_torus(
    torus4: CellComplex, caplog: pytest.LogCaptureFixture
) -> None:
    """Test meridians and longitudes are reported as non-separating."""
    with caplog.at_level(logging.WARNING):
        suite = exhaustive_jordan_suite(torus4.region(), max_len=4)
    assert suite.histogram == {1: 8, 2: 16}
    assert len(suite.non_separating) == 8
    assert not suite.all_hold
    assert "did not separate as expected" in caplog.text
