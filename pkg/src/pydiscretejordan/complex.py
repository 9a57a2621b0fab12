"""Surface-cells, 3-cells and surface regions over a graph."""

__all__ = [
    "IntersectionKind",
    "Violation",
    "ValidationReport",
    "PairReport",
    "U3Report",
    "CellComplex",
    "SurfaceRegion",
    "validate_u2",
    "default_u2",
    "validate_u3",
]

import logging
from collections import Counter, deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from itertools import combinations
from typing import Any

from .const import MINIMALITY_SEARCH_VERTEX_LIMIT, MIN_CYCLE_LEN
from .exceptions import (
    ComplexError,
    ConstructionConflictError,
    InputError,
    NoCellsError,
)
from .graph import Graph
from .models import Edge, VertexCycle

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())


class IntersectionKind(StrEnum):
    """Shape of the intersection of two 3-cells."""

    EMPTY = "empty"
    VERTEX = "vertex"
    LINE = "line"
    SURFACE = "surface"


@dataclass(frozen=True)
class Violation:
    """A single broken rule, with the cells it concerns."""

    rule: str
    cells: tuple[int, ...]

    @property
    def message(self) -> str:
        """Human readable description naming the rule and the cells."""
        ids = ",".join(f"#{i}" for i in self.cells)
        noun = "cells" if len(self.cells) > 1 else "cell"
        return f"{self.rule}: {noun} {ids}"

    def to_dict(self) -> dict[str, Any]:
        """Return the violation as a dictionary."""
        return {"rule": self.rule, "cells": list(self.cells)}


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a surface-cell validation."""

    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        """Whether no rule was broken."""
        return not self.violations

    def describe(self) -> str:
        """All violation messages joined for an exception message."""
        return "; ".join(v.message for v in self.violations)

    def to_dict(self) -> dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass(frozen=True)
class PairReport:
    """Classification of the intersection of two 3-cells."""

    first: int
    second: int
    kind: IntersectionKind
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        """Return the pair report as a dictionary."""
        return {
            "pair": [self.first, self.second],
            "kind": str(self.kind),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class U3Report:
    """Outcome of a 3-cell validation."""

    pairs: tuple[PairReport, ...] = ()

    @property
    def passed(self) -> bool:
        """Whether every pair intersects acceptably."""
        return all(p.passed for p in self.pairs)

    def describe(self) -> str:
        """Messages for every failing pair."""
        return "; ".join(
            f"3-cell intersection {p.kind} is not connected: 3-cells "
            f"#{p.first},#{p.second}"
            for p in self.pairs
            if not p.passed
        )

    def to_dict(self) -> dict[str, Any]:
        """Return the report as a dictionary."""
        return {"passed": self.passed, "pairs": [p.to_dict() for p in self.pairs]}


def _is_connected_subset(graph: Graph, vertices: Iterable[str]) -> bool:
    subset = set(vertices)
    if len(subset) <= 1:
        return True
    return len(graph.connected_components(set(graph.vertices) - subset)) == 1


def validate_u2(graph: Graph, cells: Sequence[VertexCycle]) -> ValidationReport:
    """Check a surface-cell set against the minimal-cycle and intersection rules.

    Every cell must be a chordless cycle, and every two cells must meet in
    the empty set or in a connected induced subgraph.

    Raises:
        InputError: If a cell is not a cycle of the graph at all.
    """
    violations: list[Violation] = []
    for i, cell in enumerate(cells):
        if not graph.is_minimal_cycle(cell):
            violations.append(Violation("surface-cell is not a minimal cycle", (i,)))
    for i, j in combinations(range(len(cells)), 2):
        shared = cells[i].vertex_set & cells[j].vertex_set
        if shared and not _is_connected_subset(graph, shared):
            violations.append(
                Violation("surface-cell intersection disconnected", (i, j))
            )
    return ValidationReport(tuple(violations))


def default_u2(graph: Graph) -> tuple[VertexCycle, ...]:
    """Build the default surface-cell set of a graph.

    Every shortest cycle (length equal to the girth) is taken first; then,
    for every vertex not yet covered, every shortest chordless cycle through
    that vertex is added. Vertices on no cycle stay uncovered.

    Raises:
        NoCellsError: If the graph has no cycle.
        ConstructionConflictError: If the result breaks the intersection rule.
    """
    on_cycle = graph.cycle_vertices()
    if not on_cycle:
        raise NoCellsError("Graph is acyclic: no cycle can become a surface-cell")
    cycles: tuple[VertexCycle, ...] = ()
    bound = MIN_CYCLE_LEN
    while not cycles and bound <= len(graph):
        cycles = graph.minimal_cycles(bound)
        bound += 1
    if not cycles:
        raise NoCellsError("Graph is acyclic: no cycle can become a surface-cell")

    girth = len(cycles[0])
    chosen: list[VertexCycle] = [c for c in cycles if len(c) == girth]
    covered = {v for c in chosen for v in c.vertex_set}
    pending = [v for v in graph.vertices if v in on_cycle and v not in covered]
    bound = girth
    while pending and bound <= len(graph):
        cycles = graph.minimal_cycles(bound)
        for vertex in list(pending):
            through = [c for c in cycles if vertex in c.vertex_set]
            if not through:
                continue
            shortest = len(through[0])
            chosen.extend(
                c for c in through if len(c) == shortest and c not in chosen
            )
            pending.remove(vertex)
        bound += 1

    cells = tuple(sorted(set(chosen), key=graph.cycle_key))
    for i, j in combinations(range(len(cells)), 2):
        shared = cells[i].vertex_set & cells[j].vertex_set
        if shared and not _is_connected_subset(graph, shared):
            raise ConstructionConflictError(
                f"surface-cell intersection disconnected: cells #{i},#{j}", (i, j)
            )
    _LOGGER.debug("Default construction produced %d surface-cells", len(cells))
    return cells


class CellComplex:
    """A graph together with validated surface-cells and optional 3-cells.

    Cells are stored sorted (shorter first, then by canonical order keys);
    a cell's id is its position in :attr:`cells`.
    """

    def __init__(
        self,
        graph: Graph,
        cells: Iterable[VertexCycle],
        u3: Iterable[Iterable[str]] | None = None,
        *,
        strict_u3: bool = True,
        trust_minimal: bool = False,
    ) -> None:
        """Validate and index the structure.

        Args:
            graph: Ambient graph.
            cells: Surface-cells; duplicates collapse.
            u3: Optional 3-cells as vertex sets.
            strict_u3: Require surface-type 3-cell intersections to be
                line-connected.
            trust_minimal: Skip the exhaustive minimality check of 3-cells.

        Raises:
            ComplexError: If the surface-cells or 3-cells break a rule.
            InputError: If a cell is not a cycle of the graph.
        """
        unique: dict[VertexCycle, VertexCycle] = {}
        for cell in cells:
            unique.setdefault(cell, cell)
        self.graph = graph
        self.cells: tuple[VertexCycle, ...] = tuple(
            sorted(unique.values(), key=graph.cycle_key)
        )
        report = validate_u2(graph, self.cells)
        if not report.passed:
            raise ComplexError(report.describe())

        self._cell_ids = {cell: i for i, cell in enumerate(self.cells)}
        by_vertex: dict[str, list[int]] = {}
        by_edge: dict[Edge, list[int]] = {}
        for i, cell in enumerate(self.cells):
            for v in cell.canonical:
                by_vertex.setdefault(v, []).append(i)
            for e in cell.edges():
                by_edge.setdefault(e, []).append(i)
        self._by_vertex = {v: tuple(ids) for v, ids in by_vertex.items()}
        self._by_edge = {e: tuple(ids) for e, ids in by_edge.items()}

        self.u3: tuple[frozenset[str], ...] | None = None
        if u3 is not None:
            sets = tuple(frozenset(s) for s in u3)
            u3_report = validate_u3(
                self, sets, strict=strict_u3, trust_minimal=trust_minimal
            )
            if not u3_report.passed:
                raise ComplexError(u3_report.describe())
            self.u3 = sets
        _LOGGER.debug(
            "Built complex with %d surface-cells and %d 3-cells",
            len(self.cells),
            len(self.u3 or ()),
        )

    def __repr__(self) -> str:
        return f"CellComplex({self.graph!r}, cells={len(self.cells)})"

    def cell_id(self, cell: VertexCycle) -> int:
        """Return the id of a surface-cell.

        Raises:
            InputError: If the cycle is not a surface-cell.
        """
        try:
            return self._cell_ids[cell]
        except KeyError as err:
            raise InputError(f"{cell.to_list()} is not a surface-cell") from err

    def cells_containing(self, vertex: str) -> tuple[int, ...]:
        """Ids of cells through a vertex."""
        self.graph.order(vertex)
        return self._by_vertex.get(vertex, ())

    def cells_on_edge(self, edge: Edge) -> tuple[int, ...]:
        """Ids of cells having ``edge`` as one of their edges."""
        return self._by_edge.get(edge, ())

    def region(self, vertices: Iterable[str] | None = None) -> "SurfaceRegion":
        """Region of all cells inside a vertex set (the whole graph by default)."""
        chosen = self.graph.vertices if vertices is None else vertices
        return SurfaceRegion(self, frozenset(chosen))


@dataclass(frozen=True, eq=False)
class SurfaceRegion:
    """A vertex subset of a complex, seen through the cells it contains.

    By default a region holds every cell whose vertices all lie in the
    subset. ``from_cells`` restricts the region to an explicit cell subset.
    """

    complex: CellComplex
    vertices: frozenset[str]
    cell_ids: frozenset[int] | None = field(default=None)

    def __post_init__(self) -> None:
        """Reject unknown vertices and cells."""
        self.complex.graph.check_vertices(self.vertices)
        if self.cell_ids is not None:
            unknown = [i for i in self.cell_ids if not 0 <= i < len(self.complex.cells)]
            if unknown:
                raise InputError(f"Unknown cell ids {sorted(unknown)}")

    @classmethod
    def from_cells(cls, cx: CellComplex, cell_ids: Iterable[int]) -> "SurfaceRegion":
        """Region made of exactly the given cells and their vertices."""
        ids = frozenset(cell_ids)
        for i in ids:
            if not 0 <= i < len(cx.cells):
                raise InputError(f"Unknown cell id {i}")
        vertices = frozenset(v for i in ids for v in cx.cells[i].canonical)
        return cls(cx, vertices, ids)

    @property
    def graph(self) -> Graph:
        """The ambient graph."""
        return self.complex.graph

    @cached_property
    def cells(self) -> tuple[int, ...]:
        """Ids of the cells the region holds."""
        return tuple(
            i
            for i, cell in enumerate(self.complex.cells)
            if cell.vertex_set <= self.vertices
            and (self.cell_ids is None or i in self.cell_ids)
        )

    @cached_property
    def _cell_set(self) -> frozenset[int]:
        return frozenset(self.cells)

    @cached_property
    def subgraph(self) -> Graph:
        """Subgraph induced on the region's vertices."""
        return self.graph.induced_subgraph(self.vertices)

    @cached_property
    def edge_cover(self) -> dict[Edge, int]:
        """How many of the region's cells use each induced edge."""
        counts: Counter[Edge] = Counter()
        for i in self.cells:
            counts.update(self.complex.cells[i].edges())
        return {e: counts.get(e, 0) for e in self.subgraph.edge_set}

    def sorted_vertices(self) -> tuple[str, ...]:
        """Vertices sorted by order key."""
        return self.graph.sort_vertices(self.vertices)

    def contains_cell(self, cell_id: int) -> bool:
        """Whether a cell belongs to the region."""
        return cell_id in self._cell_set

    def cells_containing(self, vertex: str) -> tuple[int, ...]:
        """Ids of the region's cells through a vertex."""
        ids = self.complex.cells_containing(vertex)
        return tuple(i for i in ids if i in self._cell_set)

    def cells_on_edge(self, edge: Edge) -> tuple[int, ...]:
        """Ids of the region's cells using an edge."""
        return tuple(i for i in self.complex.cells_on_edge(edge) if i in self._cell_set)

    def is_semi_surface(self) -> bool:
        """Every induced edge lies in one or two of the region's cells."""
        return all(1 <= n <= 2 for n in self.edge_cover.values())

    def is_closed_semi_surface(self) -> bool:
        """Every induced edge lies in exactly two of the region's cells."""
        return bool(self.cells) and all(n == 2 for n in self.edge_cover.values())

    def is_discrete_surface(self) -> bool:
        """A semi-surface that contains no 3-cell."""
        if not self.is_semi_surface():
            return False
        return not any(s <= self.vertices for s in self.complex.u3 or ())

    def boundary(self) -> frozenset[str]:
        """Vertices incident to an edge used by exactly one cell.

        Raises:
            InputError: If the region is not a semi-surface.
        """
        if not self.is_semi_surface():
            bad = [e for e, n in self.edge_cover.items() if not 1 <= n <= 2]
            shown = ", ".join(
                "-".join(self.graph.sort_pair(*e)) for e in self.graph.sort_edges(bad)
            )
            raise InputError(f"Region is not a semi-surface; bad edges: {shown}")
        return frozenset(v for e, n in self.edge_cover.items() if n == 1 for v in e)

    def sorted_boundary(self) -> tuple[str, ...]:
        """Boundary vertices sorted by order key."""
        return self.graph.sort_vertices(self.boundary())

    def cells_line_connected(self, cell_ids: Iterable[int]) -> bool:
        """Whether cells form one group under edge-sharing adjacency."""
        ids = list(cell_ids)
        if len(ids) <= 1:
            return True
        edges = {i: set(self.complex.cells[i].edges()) for i in ids}
        seen = {ids[0]}
        queue = deque([ids[0]])
        while queue:
            i = queue.popleft()
            for j in ids:
                if j not in seen and edges[i] & edges[j]:
                    seen.add(j)
                    queue.append(j)
        return len(seen) == len(ids)


def _is_minimal_closed(
    cx: CellComplex, candidate: frozenset[str], cell_ids: Sequence[int]
) -> bool:
    for size in range(1, len(cell_ids) + 1):
        for subset in combinations(cell_ids, size):
            union = frozenset(v for i in subset for v in cx.cells[i].canonical)
            if union < candidate and cx.region(union).is_closed_semi_surface():
                return False
    return True


def _classify_pair(
    cx: CellComplex, first: frozenset[str], second: frozenset[str], strict: bool
) -> tuple[IntersectionKind, bool]:
    shared = first & second
    if not shared:
        return IntersectionKind.EMPTY, True
    if len(shared) == 1:
        return IntersectionKind.VERTEX, True
    connected = _is_connected_subset(cx.graph, shared)
    region = cx.region(shared)
    if not region.cells:
        has_edges = region.subgraph.number_of_edges > 0
        kind = IntersectionKind.LINE if has_edges else IntersectionKind.VERTEX
        return kind, connected
    passed = connected and (not strict or region.cells_line_connected(region.cells))
    return IntersectionKind.SURFACE, passed


def validate_u3(
    cx: CellComplex,
    candidates: Sequence[frozenset[str]],
    *,
    strict: bool = True,
    trust_minimal: bool = False,
) -> U3Report:
    """Check 3-cell candidates and classify their pairwise intersections.

    Each candidate must be a closed semi-surface with at least one cell and
    must not properly contain a smaller closed semi-surface made of its own
    cells. Pairwise intersections are classified as empty, vertex, line or
    surface; line and surface intersections must be connected, and in strict
    mode the cells of a surface intersection must share edges.

    Raises:
        InputError: If a candidate is not a minimal closed semi-surface, or
            its minimality cannot be checked without ``trust_minimal``.
    """
    for n, candidate in enumerate(candidates):
        region = cx.region(candidate)
        if not region.is_closed_semi_surface():
            raise InputError(f"3-cell #{n} is not a closed semi-surface")
        if trust_minimal:
            continue
        if len(candidate) > MINIMALITY_SEARCH_VERTEX_LIMIT:
            raise InputError(
                f"3-cell #{n} has more than {MINIMALITY_SEARCH_VERTEX_LIMIT} "
                "vertices; pass trust_minimal to skip the minimality search"
            )
        if not _is_minimal_closed(cx, candidate, region.cells):
            raise InputError(
                f"3-cell #{n} is not minimal: it contains a smaller closed semi-surface"
            )

    pairs = []
    for i, j in combinations(range(len(candidates)), 2):
        kind, passed = _classify_pair(cx, candidates[i], candidates[j], strict)
        pairs.append(PairReport(i, j, kind, passed))
    return U3Report(tuple(pairs))
