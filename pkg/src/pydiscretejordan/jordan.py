"""Separation of discrete surfaces by closed curves."""

__all__ = [
    "FlankPair",
    "SeparationComponent",
    "SeparationReport",
    "CurveOutcome",
    "SuiteReport",
    "AugmentedIncidence",
    "cell_node",
    "edge_node",
    "flanking_cells",
    "separation_check",
    "oracle_components",
    "oracle_separation",
    "exhaustive_jordan_suite",
]

import logging
from collections import Counter, deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import networkx as nx

from .classify import (
    OrientationAtlas,
    build_orientation_atlas,
    contained_cell,
    is_semi_curve,
)
from .complex import SurfaceRegion
from .const import CELL_TAG, DEFAULT_SUITE_MAX_LEN, EDGE_TAG, MIN_CYCLE_LEN
from .exceptions import (
    NotInteriorEdgeError,
    PreconditionError,
    UnsupportedInputError,
)
from .graph import Graph
from .models import (
    Curve,
    Edge,
    SeparationMode,
    SideLabel,
    VertexCycle,
    VertexPath,
    make_edge,
)

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())


def cell_node(cell_id: int) -> str:
    """Name of the central point of a surface-cell."""
    return f"{CELL_TAG}:{cell_id}"


def edge_node(graph: Graph, edge: Edge) -> str:
    """Name of the central point of an edge."""
    u, v = graph.sort_pair(*edge)
    return f"{EDGE_TAG}:{u}-{v}"


@dataclass(frozen=True)
class FlankPair:
    """The two cells on either side of a curve edge, as walked ``start -> end``.

    ``a_side`` travels the edge in the walking direction under the atlas;
    ``b_side`` travels it the other way.
    """

    start: str
    end: str
    a_side: int
    b_side: int

    def to_dict(self) -> dict[str, Any]:
        """Return the pair as a dictionary."""
        return {"edge": [self.start, self.end], "A": self.a_side, "B": self.b_side}


def flanking_cells(
    region: SurfaceRegion, curve: Curve, atlas: OrientationAtlas
) -> tuple[FlankPair, ...]:
    """Split the two cells on every curve edge into an A-side and a B-side.

    Raises:
        NotInteriorEdgeError: If a curve edge is not covered by two cells.
        UnsupportedInputError: If the atlas does not tell the two cells apart.
    """
    travel = curve.as_path()
    seq = travel.vertices
    pairs = list(zip(seq, seq[1:], strict=False))
    if travel.closed:
        pairs.append((seq[-1], seq[0]))
    flanks = []
    for p, r in pairs:
        cells = region.cells_on_edge(make_edge(p, r))
        if len(cells) != 2:
            raise NotInteriorEdgeError(
                f"edge {p}-{r} lies in {len(cells)} cells of the region, not two"
            )
        along = [i for i in cells if atlas.traverses(i, p, r)]
        if len(along) != 1:
            raise UnsupportedInputError(
                f"cells on edge {p}-{r} are not oriented oppositely"
            )
        (a_side,) = along
        (b_side,) = (i for i in cells if i != a_side)
        flanks.append(FlankPair(p, r, a_side, b_side))
    return tuple(flanks)


class AugmentedIncidence:
    """Incidence structure in which curve complements are computed.

    In pseudo mode the nodes are the region's vertices plus a central point
    for every cell and every induced edge; a cell point links to the cell's
    vertices and edge points, an edge point links to its two ends. In strict
    mode the structure is the induced subgraph itself.
    """

    def __init__(self, region: SurfaceRegion, mode: SeparationMode) -> None:
        """Build the structure for a region."""
        self.region = region
        self.mode = mode
        graph = region.graph
        structure = nx.Graph()
        structure.add_nodes_from(region.sorted_vertices())
        if mode is SeparationMode.STRICT:
            structure.add_edges_from(region.subgraph.edges)
        else:
            for e in region.subgraph.edge_set:
                node = edge_node(graph, e)
                structure.add_edges_from((node, end) for end in e)
            for i in region.cells:
                node = cell_node(i)
                cell = region.complex.cells[i]
                structure.add_edges_from((node, v) for v in cell.canonical)
                structure.add_edges_from(
                    (node, edge_node(graph, e)) for e in cell.edges()
                )
        self.structure = nx.freeze(structure)
        self._cell_ids = {cell_node(i): i for i in region.cells}
        self._edge_keys = {
            edge_node(graph, e): graph.edge_key(e) for e in region.subgraph.edge_set
        }

    def removed_nodes(self, curve: Curve) -> frozenset[str]:
        """Nodes deleted for a curve: its vertices, plus its edge points."""
        nodes = set(curve.vertex_set)
        if self.mode is SeparationMode.PSEUDO:
            nodes.update(edge_node(self.region.graph, e) for e in curve.edge_set())
        return frozenset(nodes)

    def node_key(self, node: str) -> tuple[int, int, int]:
        """Deterministic ordering: vertices, then cell points, then edge points."""
        graph = self.region.graph
        if node in self._cell_ids:
            return (1, self._cell_ids[node], 0)
        if node in graph:
            return (0, graph.order(node), 0)
        first, second = self._edge_keys[node]
        return (2, first, second)

    def components(self, removed: Iterable[str]) -> tuple[tuple[str, ...], ...]:
        """Connected components after deleting nodes, each sorted by node key."""
        gone = set(removed)
        rest = self.structure.subgraph(n for n in self.structure if n not in gone)
        parts = [
            tuple(sorted(part, key=self.node_key))
            for part in nx.connected_components(rest)
        ]
        return tuple(sorted(parts, key=lambda c: self.node_key(c[0])))


@dataclass(frozen=True)
class SeparationComponent:
    """One piece of a curve's complement and which flank cells it holds."""

    label: SideLabel
    members: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        """Return the component as a dictionary."""
        return {
            "label": str(self.label),
            "size": len(self.members),
            "members": list(self.members),
        }


@dataclass(frozen=True)
class SeparationReport:
    """Complement of a closed curve in a surface, with side bookkeeping."""

    curve: VertexCycle
    mode: SeparationMode
    components: tuple[SeparationComponent, ...]
    flanks: tuple[FlankPair, ...]
    flank_violations: tuple[tuple[str, str], ...]
    a_connected: bool
    b_connected: bool
    oracle_agrees: bool

    @property
    def count(self) -> int:
        """Number of components of the complement."""
        return len(self.components)

    @property
    def holds(self) -> bool:
        """Whether the curve separates as expected for the mode.

        Pseudo mode expects exactly two components with each side's flank
        cells together; strict mode expects at least two components.
        """
        if self.flank_violations:
            return False
        if self.mode is SeparationMode.PSEUDO:
            return self.count == 2 and self.a_connected and self.b_connected
        return self.count >= 2

    def to_dict(self) -> dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "curve": self.curve.to_list(),
            "mode": str(self.mode),
            "count": self.count,
            "holds": self.holds,
            "components": [c.to_dict() for c in self.components],
            "flanks": [f.to_dict() for f in self.flanks],
            "flank_violations": [list(v) for v in self.flank_violations],
            "a_connected": self.a_connected,
            "b_connected": self.b_connected,
            "oracle_agrees": self.oracle_agrees,
        }


def _check_preconditions(
    region: SurfaceRegion, curve: Curve | Sequence[str], mode: SeparationMode
) -> VertexCycle:
    graph = region.graph
    violations: list[str] = []
    if isinstance(curve, VertexPath | VertexCycle):
        seq = curve.vertices
        if not curve.closed:
            violations.append("curve is not closed")
    else:
        seq = tuple(curve)
        if len(set(seq)) != len(seq):
            violations.append("curve is not simple: it repeats a vertex")
    graph.check_vertices(seq)
    if len(set(seq)) < MIN_CYCLE_LEN:
        violations.append(f"curve has fewer than {MIN_CYCLE_LEN} vertices")
    outside = [v for v in seq if v not in region.vertices]
    if outside:
        violations.append(f"curve leaves the region at {', '.join(outside)}")
    if violations:
        raise PreconditionError(violations)

    cycle = graph.cycle(seq)
    if not region.is_semi_surface():
        violations.append("region is not a semi-surface")
    else:
        touching = graph.sort_vertices(cycle.vertex_set & region.boundary())
        if touching:
            violations.append(f"curve touches the boundary at {', '.join(touching)}")
    if not is_semi_curve(region.complex, cycle):
        violations.append("curve has a chord")
    if mode is SeparationMode.STRICT:
        inside = contained_cell(region.complex, cycle)
        if inside is not None:
            violations.append(f"curve contains surface-cell #{inside}")
    if violations:
        raise PreconditionError(violations)
    return cycle


def _markers(
    region: SurfaceRegion, mode: SeparationMode, cell_id: int, curve: VertexCycle
) -> set[str]:
    if mode is SeparationMode.PSEUDO:
        return {cell_node(cell_id)}
    return set(region.complex.cells[cell_id].vertex_set - curve.vertex_set)


def _separate(
    region: SurfaceRegion,
    cycle: VertexCycle,
    mode: SeparationMode,
    atlas: OrientationAtlas,
) -> SeparationReport:
    flanks = flanking_cells(region, cycle, atlas)
    incidence = AugmentedIncidence(region, mode)
    parts = incidence.components(incidence.removed_nodes(cycle))
    where = {node: n for n, part in enumerate(parts) for node in part}

    a_marks: set[str] = set()
    b_marks: set[str] = set()
    violations = []
    for flank in flanks:
        a_here = _markers(region, mode, flank.a_side, cycle)
        b_here = _markers(region, mode, flank.b_side, cycle)
        a_marks |= a_here
        b_marks |= b_here
        if {where[n] for n in a_here} & {where[n] for n in b_here}:
            violations.append((flank.start, flank.end))

    a_parts = {where[n] for n in a_marks}
    b_parts = {where[n] for n in b_marks}
    components = []
    for n, part in enumerate(parts):
        if n in a_parts and n in b_parts:
            label = SideLabel.BOTH
        elif n in a_parts:
            label = SideLabel.A_SIDE
        elif n in b_parts:
            label = SideLabel.B_SIDE
        else:
            label = SideLabel.OTHER
        components.append(SeparationComponent(label, part))

    oracle = set(oracle_components(region, cycle, mode))
    agrees = oracle == {frozenset(part) for part in parts}
    if not agrees:
        _LOGGER.warning("Separation oracle disagrees on %s", cycle.to_list())
    return SeparationReport(
        curve=cycle,
        mode=mode,
        components=tuple(components),
        flanks=flanks,
        flank_violations=tuple(violations),
        a_connected=len(a_parts) <= 1,
        b_connected=len(b_parts) <= 1,
        oracle_agrees=agrees,
    )


def _require_atlas(
    region: SurfaceRegion, atlas: OrientationAtlas | None
) -> OrientationAtlas:
    atlas = atlas if atlas is not None else build_orientation_atlas(region)
    if not atlas.consistent:
        raise UnsupportedInputError(
            "flank sides need an orientable region; "
            f"{len(atlas.conflicts)} edges cannot be oriented consistently"
        )
    return atlas


def separation_check(
    region: SurfaceRegion,
    curve: Curve | Sequence[str],
    mode: SeparationMode = SeparationMode.PSEUDO,
    atlas: OrientationAtlas | None = None,
) -> SeparationReport:
    """Compute the complement of a closed curve and label its components.

    Every component is labelled by which flank cells it holds. Pseudo mode
    also deletes the curve's edge points; strict mode works on the original
    vertices only and requires a curve that contains no cell.

    Args:
        region: Surface region the curve lies in.
        curve: Closed curve, or a vertex sequence with closing edge implied.
        mode: Structure in which to compute the complement.
        atlas: Cell orientation; built from the region when omitted.

    Raises:
        PreconditionError: Listing every unmet precondition.
        NotInteriorEdgeError: If a curve edge is not covered by two cells.
        UnsupportedInputError: If the region is not orientable.
    """
    cycle = _check_preconditions(region, curve, mode)
    report = _separate(region, cycle, mode, _require_atlas(region, atlas))
    _LOGGER.debug(
        "Curve %s leaves %d components in %s mode",
        cycle.to_list(),
        report.count,
        mode,
    )
    return report


def oracle_components(
    region: SurfaceRegion,
    curve: Curve,
    mode: SeparationMode = SeparationMode.PSEUDO,
) -> tuple[frozenset[str], ...]:
    """Complement components by a plain breadth-first flood fill.

    The incidence structure is rebuilt from adjacency lists, independently of
    :class:`AugmentedIncidence`.

    Raises:
        PreconditionError: If the curve is empty.
    """
    if not curve.vertex_set:
        raise PreconditionError(["curve is empty"])
    graph = region.graph
    links: dict[str, set[str]] = {v: set() for v in region.vertices}

    def join(a: str, b: str) -> None:
        links.setdefault(a, set()).add(b)
        links.setdefault(b, set()).add(a)

    for u in region.vertices:
        for v in graph.neighbors(u):
            if v not in region.vertices:
                continue
            if mode is SeparationMode.STRICT:
                join(u, v)
            else:
                node = edge_node(graph, make_edge(u, v))
                join(node, u)
                join(node, v)
    if mode is SeparationMode.PSEUDO:
        for i in region.cells:
            seq = region.complex.cells[i].canonical
            for k, v in enumerate(seq):
                join(cell_node(i), v)
                join(cell_node(i), edge_node(graph, make_edge(v, seq[k - 1])))

    blocked = set(curve.vertex_set)
    if mode is SeparationMode.PSEUDO:
        blocked.update(edge_node(graph, e) for e in curve.edge_set())
    seen: set[str] = set()
    found = []
    for start in links:
        if start in blocked or start in seen:
            continue
        piece = {start}
        queue = deque([start])
        while queue:
            for nxt in links[queue.popleft()]:
                if nxt not in blocked and nxt not in piece:
                    piece.add(nxt)
                    queue.append(nxt)
        seen |= piece
        found.append(frozenset(piece))
    return tuple(found)


def oracle_separation(
    region: SurfaceRegion,
    curve: Curve,
    mode: SeparationMode = SeparationMode.PSEUDO,
) -> int:
    """Number of complement components, counted by the flood-fill oracle."""
    return len(oracle_components(region, curve, mode))


@dataclass(frozen=True)
class CurveOutcome:
    """Separation summary for one curve of an exhaustive run."""

    curve: VertexCycle
    count: int
    holds: bool
    oracle_agrees: bool
    flank_violations: int

    def to_dict(self) -> dict[str, Any]:
        """Return the outcome as a dictionary."""
        return {
            "curve": self.curve.to_list(),
            "count": self.count,
            "holds": self.holds,
            "oracle_agrees": self.oracle_agrees,
            "flank_violations": self.flank_violations,
        }


@dataclass(frozen=True)
class SuiteReport:
    """Separation results for every short chordless curve off the boundary."""

    mode: SeparationMode
    max_len: int
    outcomes: tuple[CurveOutcome, ...] = ()
    skipped: int = 0

    @property
    def all_hold(self) -> bool:
        """Whether every curve separated as expected and the oracle agreed."""
        return all(o.holds and o.oracle_agrees for o in self.outcomes)

    @property
    def histogram(self) -> dict[int, int]:
        """How many curves left each number of components."""
        return dict(sorted(Counter(o.count for o in self.outcomes).items()))

    @property
    def non_separating(self) -> tuple[VertexCycle, ...]:
        """Curves whose complement stayed connected."""
        return tuple(o.curve for o in self.outcomes if o.count == 1)

    def to_dict(self) -> dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "mode": str(self.mode),
            "max_len": self.max_len,
            "curves": len(self.outcomes),
            "skipped": self.skipped,
            "all_hold": self.all_hold,
            "histogram": {str(k): v for k, v in self.histogram.items()},
            "non_separating": [c.to_list() for c in self.non_separating],
            "outcomes": [o.to_dict() for o in self.outcomes],
        }


def exhaustive_jordan_suite(
    region: SurfaceRegion,
    max_len: int = DEFAULT_SUITE_MAX_LEN,
    mode: SeparationMode = SeparationMode.PSEUDO,
    atlas: OrientationAtlas | None = None,
) -> SuiteReport:
    """Check separation for every chordless cycle away from the boundary.

    Curves are the chordless cycles of the subgraph induced on the region's
    inner points, up to ``max_len`` vertices. Strict mode skips curves that
    contain a cell.

    Raises:
        PreconditionError: If the region is not a semi-surface.
        UnsupportedInputError: If the region is not orientable.
    """
    if not region.is_semi_surface():
        raise PreconditionError(["region is not a semi-surface"])
    graph = region.graph
    inner = region.vertices - region.boundary()
    interior = graph.induced_subgraph(inner)
    curves = tuple(graph.cycle(c.vertices) for c in interior.minimal_cycles(max_len))
    atlas = _require_atlas(region, atlas)

    outcomes = []
    skipped = 0
    for curve in curves:
        if (
            mode is SeparationMode.STRICT
            and contained_cell(region.complex, curve) is not None
        ):
            skipped += 1
            continue
        report = _separate(region, curve, mode, atlas)
        outcomes.append(
            CurveOutcome(
                curve,
                report.count,
                report.holds,
                report.oracle_agrees,
                len(report.flank_violations),
            )
        )
        _LOGGER.debug("Curve %s: %d components", curve.to_list(), report.count)
    suite = SuiteReport(mode, max_len, tuple(outcomes), skipped)
    if not suite.all_hold:
        _LOGGER.warning(
            "%d of %d curves did not separate as expected",
            sum(1 for o in outcomes if not (o.holds and o.oracle_agrees)),
            len(outcomes),
        )
    return suite
