"""Shared pytest fixtures for pydiscretejordan tests."""
# pylint: disable=redefined-outer-name

from collections.abc import Callable
from pathlib import Path

import pytest

from pydiscretejordan import CellComplex, SurfaceRegion, generate


@pytest.fixture
def grid3() -> CellComplex:
    """3x3 grid with its four unit squares as cells.

    Returns:
        CellComplex: Simply connected square with boundary.
    """
    return generate("grid", n=3).build()


@pytest.fixture
def grid5() -> CellComplex:
    """5x5 grid with its sixteen unit squares as cells.

    Returns:
        CellComplex: Simply connected square with a 3x3 interior.
    """
    return generate("grid", n=5).build()


@pytest.fixture
def cube() -> CellComplex:
    """Surface of the cube, six square faces.

    Returns:
        CellComplex: Closed simply connected surface.
    """
    return generate("cube").build()


@pytest.fixture
def octahedron() -> CellComplex:
    """Surface of the octahedron, eight triangles."""
    return generate("octahedron").build()


@pytest.fixture
def torus4() -> CellComplex:
    """4x4 torus grid; closed but not simply connected."""
    return generate("torus-grid", n=4).build()


@pytest.fixture
def moebius() -> CellComplex:
    """Moebius strip of five squares; not orientable."""
    return generate("moebius-strip").build()


@pytest.fixture
def bowtie() -> CellComplex:
    """Two squares meeting at the single point ``p``."""
    return generate("bowtie").build()


@pytest.fixture
def grid3_region(grid3: CellComplex) -> SurfaceRegion:
    """The whole 3x3 grid as a region."""
    return grid3.region()


@pytest.fixture
def grid5_region(grid5: CellComplex) -> SurfaceRegion:
    """The whole 5x5 grid as a region."""
    return grid5.region()


@pytest.fixture
def write_fixture(tmp_path: Path) -> Callable[..., Path]:
    """Write a generated complex to a ``.dcx`` file.

    Returns:
        Callable taking the fixture kind and size parameters, returning the
            path of the written document.
    """

    def _write(kind: str, **params: int) -> Path:
        path = tmp_path / f"{kind}.dcx"
        generate(kind, **params).save(path)
        return path

    return _write


@pytest.fixture
def write_document(tmp_path: Path) -> Callable[..., Path]:
    """Write raw document text to a file and return its path."""

    def _write(text: str, name: str = "complex.dcx") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write

