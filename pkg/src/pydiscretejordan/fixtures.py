"""Generators for reference complexes used in tests and examples."""

__all__ = ["FIXTURE_KINDS", "generate"]

import logging
from collections.abc import Callable
from itertools import combinations, product

from .const import (
    DEFAULT_GRID_SIZE,
    DEFAULT_MOEBIUS_LENGTH,
    DEFAULT_TORUS_SIZE,
    GRID_MIN_SIZE,
    MOEBIUS_MIN_LENGTH,
    TORUS_MIN_SIZE,
)
from .document import ComplexDocument
from .exceptions import InputError

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())


def _node(row: int, col: int) -> str:
    return f"r{row}c{col}"


def _check_range(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise InputError(f"{name} must be at least {minimum}, got {value}")


def _grid(n: int = DEFAULT_GRID_SIZE) -> ComplexDocument:
    _check_range("n", n, GRID_MIN_SIZE)
    vertices = tuple(_node(i, j) for i in range(n) for j in range(n))
    edges = []
    for i, j in product(range(n), range(n)):
        if j + 1 < n:
            edges.append((_node(i, j), _node(i, j + 1)))
        if i + 1 < n:
            edges.append((_node(i, j), _node(i + 1, j)))
    cells = tuple(
        (_node(i, j), _node(i, j + 1), _node(i + 1, j + 1), _node(i + 1, j))
        for i in range(n - 1)
        for j in range(n - 1)
    )
    return ComplexDocument(
        vertices, tuple(edges), cells, metadata=(("generator", "grid"), ("n", str(n)))
    )


def _torus_grid(n: int = DEFAULT_TORUS_SIZE, m: int | None = None) -> ComplexDocument:
    cols = n if m is None else m
    _check_range("n", n, TORUS_MIN_SIZE)
    _check_range("m", cols, TORUS_MIN_SIZE)
    vertices = tuple(_node(i, j) for i in range(n) for j in range(cols))
    edges = []
    for i, j in product(range(n), range(cols)):
        edges.append((_node(i, j), _node(i, (j + 1) % cols)))
        edges.append((_node(i, j), _node((i + 1) % n, j)))
    cells = tuple(
        (
            _node(i, j),
            _node(i, (j + 1) % cols),
            _node((i + 1) % n, (j + 1) % cols),
            _node((i + 1) % n, j),
        )
        for i in range(n)
        for j in range(cols)
    )
    metadata = (("generator", "torus-grid"), ("n", str(n)), ("m", str(cols)))
    return ComplexDocument(vertices, tuple(edges), cells, metadata=metadata)


def _cube() -> ComplexDocument:
    vertices = tuple(f"{x}{y}{z}" for x, y, z in product((0, 1), repeat=3))
    edges = tuple(
        (u, v)
        for u, v in combinations(vertices, 2)
        if sum(a != b for a, b in zip(u, v, strict=True)) == 1
    )
    # Faces are coherently oriented: shared edges run in opposite directions
    cells = (
        ("000", "001", "011", "010"),
        ("100", "110", "111", "101"),
        ("000", "100", "101", "001"),
        ("010", "011", "111", "110"),
        ("000", "010", "110", "100"),
        ("001", "101", "111", "011"),
    )
    return ComplexDocument(vertices, edges, cells, metadata=(("generator", "cube"),))


def _octahedron() -> ComplexDocument:
    axes = ("x", "y", "z")
    vertices = tuple(f"{axis}{sign}" for axis in axes for sign in ("p", "n"))
    edges = tuple(
        (u, v) for u, v in combinations(vertices, 2) if u[0] != v[0]
    )
    cells = []
    for signs in product("pn", repeat=3):
        x, y, z = (f"{axis}{sign}" for axis, sign in zip(axes, signs, strict=True))
        outward = signs.count("n") % 2 == 0
        cells.append((x, y, z) if outward else (x, z, y))
    return ComplexDocument(
        vertices, edges, tuple(cells), metadata=(("generator", "octahedron"),)
    )


def _moebius_strip(length: int = DEFAULT_MOEBIUS_LENGTH) -> ComplexDocument:
    _check_range("length", length, MOEBIUS_MIN_LENGTH)
    top = [f"t{i}" for i in range(length)]
    bottom = [f"b{i}" for i in range(length)]
    vertices = (*top, *bottom)
    edges = [(top[i], bottom[i]) for i in range(length)]
    for i in range(length - 1):
        edges.append((top[i], top[i + 1]))
        edges.append((bottom[i], bottom[i + 1]))
    # The last square closes the strip with a half twist
    edges.append((top[-1], bottom[0]))
    edges.append((bottom[-1], top[0]))
    cells = [
        (top[i], top[i + 1], bottom[i + 1], bottom[i]) for i in range(length - 1)
    ]
    cells.append((top[-1], bottom[0], top[0], bottom[-1]))
    metadata = (("generator", "moebius-strip"), ("length", str(length)))
    return ComplexDocument(vertices, tuple(edges), tuple(cells), metadata=metadata)


def _bowtie() -> ComplexDocument:
    vertices = ("p", "a1", "a2", "a3", "b1", "b2", "b3")
    edges = (
        ("p", "a1"),
        ("a1", "a2"),
        ("a2", "a3"),
        ("a3", "p"),
        ("p", "b1"),
        ("b1", "b2"),
        ("b2", "b3"),
        ("b3", "p"),
    )
    cells = (("p", "a1", "a2", "a3"), ("p", "b1", "b2", "b3"))
    return ComplexDocument(vertices, edges, cells, metadata=(("generator", "bowtie"),))


FIXTURE_KINDS: dict[str, Callable[..., ComplexDocument]] = {
    "grid": _grid,
    "torus-grid": _torus_grid,
    "cube": _cube,
    "octahedron": _octahedron,
    "moebius-strip": _moebius_strip,
    "bowtie": _bowtie,
}


def generate(kind: str, **params: int) -> ComplexDocument:
    """Generate a reference complex as a document with explicit cells.

    Args:
        kind: One of ``grid`` (``n``), ``torus-grid`` (``n``, ``m``),
            ``cube``, ``octahedron``, ``moebius-strip`` (``length``) or
            ``bowtie``.
        **params: Size parameters for the chosen kind.

    Raises:
        InputError: On an unknown kind, unknown parameter or out-of-range size.
    """
    try:
        builder = FIXTURE_KINDS[kind]
    except KeyError as err:
        raise InputError(
            f"Unknown fixture kind {kind!r}; choose from {sorted(FIXTURE_KINDS)}"
        ) from err
    try:
        document = builder(**params)
    except TypeError as err:
        raise InputError(f"Bad parameters {sorted(params)} for {kind!r}") from err
    _LOGGER.debug(
        "Generated %s with %d vertices and %d edges",
        kind,
        len(document.vertices),
        len(document.edges),
    )
    return document
