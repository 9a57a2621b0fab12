"""Data models for pydiscretejordan."""

__all__ = [
    "Edge",
    "Orientation",
    "Side",
    "Verdict",
    "SideLabel",
    "SeparationMode",
    "VertexPath",
    "VertexCycle",
    "Curve",
    "Budget",
    "make_edge",
    "parse_vertex_list",
]

import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import Any

from .const import (
    DEFAULT_MAX_CYCLE_LEN,
    DEFAULT_MAX_STEPS,
    LIST_SEPARATOR,
    MIN_CYCLE_LEN,
)
from .exceptions import InputError

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())

Edge = frozenset[str]


def make_edge(u: str, v: str) -> Edge:
    """Return the undirected edge between two vertices."""
    return frozenset((u, v))


def parse_vertex_list(text: str) -> tuple[str, ...]:
    """Parse a comma-separated vertex list such as ``"a,b,c"``.

    Raises:
        InputError: If the list is empty or has an empty entry.
    """
    names = tuple(part.strip() for part in text.split(LIST_SEPARATOR))
    if not names or any(not name for name in names):
        raise InputError(f"Malformed vertex list {text!r}")
    return names


class Orientation(StrEnum):
    """Travel direction of a cycle relative to its canonical form."""

    CW = "cw"
    CCW = "ccw"

    def flipped(self) -> "Orientation":
        """Return the opposite orientation."""
        return Orientation.CCW if self is Orientation.CW else Orientation.CW


class Side(StrEnum):
    """Position of a probe vertex relative to a curve passing a point."""

    LEFT = "left"
    RIGHT = "right"
    ON = "on"


class Verdict(StrEnum):
    """Outcome of a bounded search."""

    VERIFIED = "verified"
    INDETERMINATE = "indeterminate"
    REFUTED = "refuted"


class SideLabel(StrEnum):
    """Which flank cells of a curve a separation component contains."""

    A_SIDE = "A-side"
    B_SIDE = "B-side"
    BOTH = "both"
    OTHER = "other"


class SeparationMode(StrEnum):
    """Structure in which curve complements are computed."""

    STRICT = "strict"
    PSEUDO = "pseudo"


def _cyclic_edges(vertices: Sequence[str], closed: bool) -> tuple[Edge, ...]:
    pairs = list(zip(vertices, vertices[1:], strict=False))
    if closed and len(vertices) >= MIN_CYCLE_LEN:
        pairs.append((vertices[-1], vertices[0]))
    return tuple(make_edge(u, v) for u, v in pairs)


@dataclass(frozen=True)
class VertexPath:
    """Simple path given as an ordered vertex sequence.

    A closed path additionally joins its last vertex back to its first. A
    single vertex is a valid open path (a point).
    """

    vertices: tuple[str, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        """Validate simplicity and length."""
        if not self.vertices:
            raise InputError("A path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError(f"Path {list(self.vertices)} repeats a vertex")
        if self.closed and len(self.vertices) < MIN_CYCLE_LEN:
            raise InputError(
                f"Closed path {list(self.vertices)} has fewer than "
                f"{MIN_CYCLE_LEN} vertices"
            )

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    @property
    def is_point(self) -> bool:
        """Whether the path is a single vertex."""
        return len(self.vertices) == 1

    @property
    def ends(self) -> tuple[str, str] | None:
        """First and last vertex of an open path; None for closed paths."""
        if self.closed:
            return None
        return self.vertices[0], self.vertices[-1]

    @property
    def vertex_set(self) -> frozenset[str]:
        """Vertices as a set."""
        return frozenset(self.vertices)

    @cached_property
    def _edge_cache(self) -> tuple[tuple[Edge, ...], frozenset[Edge]]:
        edges = _cyclic_edges(self.vertices, self.closed)
        return edges, frozenset(edges)

    def edges(self) -> tuple[Edge, ...]:
        """Edges in travel order, including the closing edge of a closed path."""
        return self._edge_cache[0]

    def edge_set(self) -> frozenset[Edge]:
        """Edges as a set."""
        return self._edge_cache[1]

    def successor(self, vertex: str) -> str | None:
        """Vertex after ``vertex`` in travel order, or None past an open end."""
        i = self.vertices.index(vertex)
        if i + 1 < len(self.vertices):
            return self.vertices[i + 1]
        return self.vertices[0] if self.closed else None

    def predecessor(self, vertex: str) -> str | None:
        """Vertex before ``vertex`` in travel order, or None before an open end."""
        i = self.vertices.index(vertex)
        if i > 0:
            return self.vertices[i - 1]
        return self.vertices[-1] if self.closed else None

    def reversed(self) -> "VertexPath":
        """Return the same path travelled backwards."""
        return VertexPath(tuple(reversed(self.vertices)), self.closed)

    def as_path(self) -> "VertexPath":
        """Return self; lets paths and cycles be handled uniformly."""
        return self

    def to_list(self) -> list[str]:
        """Return the vertices as a list for serialization."""
        return list(self.vertices)


@dataclass(frozen=True)
class VertexCycle:
    """Simple cycle stored in a canonical rotation and direction.

    The canonical form starts at the vertex with the smallest order key and
    continues towards the smaller of its two neighbours, so two cycles with
    the same vertices and edges compare equal. ``orientation`` records whether
    the travel order equals the canonical order (CW) or its reverse (CCW); it
    does not take part in equality.
    """

    canonical: tuple[str, ...]
    orientation: Orientation = field(default=Orientation.CW, compare=False)

    def __post_init__(self) -> None:
        """Validate simplicity and length."""
        if len(self.canonical) < MIN_CYCLE_LEN:
            raise InputError(
                f"Cycle {list(self.canonical)} has fewer than {MIN_CYCLE_LEN} vertices"
            )
        if len(set(self.canonical)) != len(self.canonical):
            raise InputError(f"Cycle {list(self.canonical)} repeats a vertex")

    @classmethod
    def from_sequence(
        cls, sequence: Sequence[str], order: Callable[[str], int]
    ) -> "VertexCycle":
        """Create a cycle from a travel sequence.

        Args:
            sequence: Vertices in travel order, closing edge implied.
            order: Key giving each vertex its declaration position.

        Returns:
            Canonical cycle whose ``vertices`` reproduce the travel direction.
        """
        seq = tuple(sequence)
        if len(seq) < MIN_CYCLE_LEN:
            raise InputError(
                f"Cycle {list(seq)} has fewer than {MIN_CYCLE_LEN} vertices"
            )
        start = min(range(len(seq)), key=lambda i: order(seq[i]))
        rotated = seq[start:] + seq[:start]
        if order(rotated[1]) < order(rotated[-1]):
            return cls(rotated, Orientation.CW)
        return cls((rotated[0], *reversed(rotated[1:])), Orientation.CCW)

    @property
    def closed(self) -> bool:
        """Cycles are always closed."""
        return True

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertices in travel order, starting at the canonical first vertex."""
        if self.orientation is Orientation.CW:
            return self.canonical
        return (self.canonical[0], *reversed(self.canonical[1:]))

    @property
    def vertex_set(self) -> frozenset[str]:
        """Vertices as a set."""
        return frozenset(self.canonical)

    @property
    def is_point(self) -> bool:
        """Cycles are never points."""
        return False

    def __len__(self) -> int:
        return len(self.canonical)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    @cached_property
    def _edge_cache(self) -> tuple[tuple[Edge, ...], frozenset[Edge]]:
        edges = _cyclic_edges(self.vertices, True)
        return edges, frozenset(edges)

    def edges(self) -> tuple[Edge, ...]:
        """Edges in travel order, including the closing edge."""
        return self._edge_cache[0]

    def edge_set(self) -> frozenset[Edge]:
        """Edges as a set."""
        return self._edge_cache[1]

    def successor(self, vertex: str) -> str:
        """Vertex after ``vertex`` in travel order."""
        seq = self.vertices
        return seq[(seq.index(vertex) + 1) % len(seq)]

    def predecessor(self, vertex: str) -> str:
        """Vertex before ``vertex`` in travel order."""
        seq = self.vertices
        return seq[seq.index(vertex) - 1]

    def traverses(self, u: str, v: str) -> bool:
        """Whether travel order passes directly from ``u`` to ``v``."""
        return u in self.canonical and self.successor(u) == v

    def reversed(self) -> "VertexCycle":
        """Return the same cycle travelled in the opposite direction."""
        return VertexCycle(self.canonical, self.orientation.flipped())

    def with_orientation(self, orientation: Orientation) -> "VertexCycle":
        """Return the same cycle with the given travel direction."""
        return VertexCycle(self.canonical, orientation)

    def as_path(self) -> VertexPath:
        """Return the cycle as a closed path in travel order."""
        return VertexPath(self.vertices, closed=True)

    def to_list(self) -> list[str]:
        """Return the travel-order vertices as a list for serialization."""
        return list(self.vertices)


Curve = VertexPath | VertexCycle


@dataclass(frozen=True)
class Budget:
    """Search budget for bounded deformation searches."""

    max_cycle_len: int = DEFAULT_MAX_CYCLE_LEN
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self) -> None:
        """Validate the bounds."""
        if self.max_cycle_len < MIN_CYCLE_LEN:
            raise InputError(
                f"max_cycle_len must be at least {MIN_CYCLE_LEN}, "
                f"got {self.max_cycle_len}"
            )
        if self.max_steps < 1:
            raise InputError(f"max_steps must be positive, got {self.max_steps}")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Budget":
        """Create a budget from a dictionary, falling back to defaults."""
        return cls(
            max_cycle_len=int(data.get("max_cycle_len", DEFAULT_MAX_CYCLE_LEN)),
            max_steps=int(data.get("max_steps", DEFAULT_MAX_STEPS)),
        )

    def to_dict(self) -> dict[str, int]:
        """Return the budget as a dictionary."""
        return {"max_cycle_len": self.max_cycle_len, "max_steps": self.max_steps}
