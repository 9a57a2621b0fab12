"""Gradual variation of discrete paths and bounded homotopy searches."""

__all__ = [
    "DeformationStep",
    "CrossingLocus",
    "CrossOverResult",
    "SideVariation",
    "HomotopyCertificate",
    "SearchResult",
    "InstanceOutcome",
    "SimplyConnectedReport",
    "CrosscheckReport",
    "xor_edges",
    "xor_sum",
    "is_gradual_variation",
    "crosses_over",
    "is_side_gradual_variation",
    "contract_to_point",
    "find_homotopy",
    "check_contractible",
    "check_arc_sweepable",
    "crosscheck_simply_connected",
]

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from .classify import (
    NeighborhoodDisk,
    OrientationAtlas,
    build_orientation_atlas,
    is_regular_point,
    is_semi_curve,
    neighborhood,
    side_of,
    union_neighborhood,
)
from .complex import CellComplex, SurfaceRegion
from .exceptions import (
    DiscreteTopologyError,
    InputError,
    PreconditionError,
    StepInvalidError,
    UnsupportedInputError,
)
from .graph import Graph
from .jordan import oracle_separation
from .models import (
    Budget,
    Curve,
    Edge,
    SeparationMode,
    Side,
    Verdict,
    VertexCycle,
    VertexPath,
)

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())


def _curve_to_data(curve: Curve) -> dict[str, Any]:
    return {"vertices": curve.to_list(), "closed": curve.closed}


def xor_edges(first: Curve, second: Curve) -> frozenset[Edge]:
    """Symmetric difference of the edge sets of two paths."""
    return first.edge_set() ^ second.edge_set()


def _is_single_arc(vertices: frozenset[str], edges: frozenset[Edge]) -> bool:
    """Whether the edges form one simple path covering exactly the vertices."""
    if not edges or len(edges) != len(vertices) - 1:
        return False
    adjacency: dict[str, set[str]] = {v: set() for v in vertices}
    for e in edges:
        a, b = tuple(e)
        if a not in adjacency or b not in adjacency:
            return False
        adjacency[a].add(b)
        adjacency[b].add(a)
    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in adjacency[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen == vertices


def _assemble(graph: Graph, edges: frozenset[Edge], like: Curve) -> Curve:
    """Turn an edge set back into a path, keeping ``like``'s start and direction."""
    if not edges:
        raise StepInvalidError("XorSum leaves no edges")
    adjacency: dict[str, list[str]] = {}
    for e in edges:
        a, b = tuple(e)
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    degrees = {v: len(n) for v, n in adjacency.items()}
    ends = [v for v, d in degrees.items() if d == 1]
    if any(d > 2 for d in degrees.values()) or len(ends) not in (0, 2):
        raise StepInvalidError("XorSum is not a simple path or cycle")

    travel = like.vertices
    if ends:
        start = travel[0] if travel[0] in ends else min(ends, key=graph.order)
        first = adjacency[start][0]
    else:
        start, first = "", ""
        for i, v in enumerate(travel):
            nxt = travel[(i + 1) % len(travel)]
            if v in adjacency and nxt in adjacency[v]:
                start, first = v, nxt
                break
        if not start:
            start = min(adjacency, key=graph.order)
            first = min(adjacency[start], key=graph.order)

    seq = [start, first]
    while len(seq) <= len(adjacency):
        options = [v for v in adjacency[seq[-1]] if v != seq[-2]]
        if not options or options[0] == start:
            break
        seq.append(options[0])
    if len(seq) != len(adjacency):
        raise StepInvalidError("XorSum splits into more than one piece")
    if ends:
        return VertexPath(tuple(seq))
    return VertexCycle.from_sequence(seq, graph.order)


def xor_sum(cx: CellComplex, curve: Curve, other: Curve) -> Curve:
    """Replace the part of ``curve`` shared with ``other`` by the rest of ``other``.

    The result is the edge symmetric difference, reassembled from ``curve``'s
    first vertex (open paths) or along ``curve``'s direction (cycles). When
    ``other`` is closed it must meet ``curve`` in a single arc with at least
    one edge.

    Raises:
        InputError: If either path is not a path of the graph.
        StepInvalidError: If the arc hypothesis fails or the result is not a
            simple path.
    """
    graph = cx.graph
    for part in (curve, other):
        graph.path(part.vertices, closed=part.closed)
    if other.closed:
        shared = curve.vertex_set & other.vertex_set
        shared_edges = curve.edge_set() & other.edge_set()
        if not _is_single_arc(shared, shared_edges):
            raise StepInvalidError(
                "closed path does not meet the curve in a single arc with an edge"
            )
    return _assemble(graph, xor_edges(curve, other), curve)


@dataclass(frozen=True)
class DeformationStep:
    """Gradual variation check between two paths, with witness cells.

    A failed check keeps the reason in ``failure`` and is falsy.
    """

    source: Curve
    target: Curve
    vertex_witnesses: tuple[tuple[str, int], ...] = ()
    edge_witnesses: tuple[tuple[tuple[str, str], int], ...] = ()
    failure: str | None = None

    @property
    def ok(self) -> bool:
        """Whether the two paths are gradually varied."""
        return self.failure is None

    def __bool__(self) -> bool:
        return self.ok

    @property
    def witness_cells(self) -> tuple[int, ...]:
        """Distinct witness cell ids, sorted."""
        ids = {i for _, i in self.vertex_witnesses}
        ids |= {i for _, i in self.edge_witnesses}
        return tuple(sorted(ids))

    def to_dict(self) -> dict[str, Any]:
        """Return the step as a dictionary."""
        return {
            "source": _curve_to_data(self.source),
            "target": _curve_to_data(self.target),
            "ok": self.ok,
            "failure": self.failure,
            "vertex_witnesses": [[v, i] for v, i in self.vertex_witnesses],
            "edge_witnesses": [[list(e), i] for e, i in self.edge_witnesses],
        }


def _clauses(
    cx: CellComplex,
    moving: Curve,
    other: Curve,
    candidates: Sequence[int],
) -> tuple[list[tuple[str, int]], list[tuple[tuple[str, str], int]], str | None]:
    path = moving.as_path()
    target = other.as_path()
    inner = path.vertices if path.closed else path.vertices[1:-1]
    reach = target.vertex_set
    vertex_hits: list[tuple[str, int]] = []
    for v in inner:
        if v in reach:
            continue
        hit = next(
            (
                i
                for i in candidates
                if v in cx.cells[i].vertex_set and cx.cells[i].vertex_set & reach
            ),
            None,
        )
        if hit is None:
            return [], [], f"vertex {v} has no cell reaching the other path"
        vertex_hits.append((v, hit))

    edge_hits: list[tuple[tuple[str, str], int]] = []
    if target.is_point:
        return vertex_hits, edge_hits, None
    edges = path.edges()
    inner_edges = edges if path.closed else edges[1:-1]
    own = path.edge_set()
    fresh = target.edge_set() - own
    for e in inner_edges:
        if e in target.edge_set():
            continue
        hit = next(
            (
                i
                for i in candidates
                if e in cx.cells[i].edge_set() and cx.cells[i].edge_set() & fresh
            ),
            None,
        )
        pair = cx.graph.sort_pair(*e)
        if hit is None:
            reason = f"edge {pair[0]}-{pair[1]} has no cell reaching the other path"
            return [], [], reason
        edge_hits.append((pair, hit))
    return vertex_hits, edge_hits, None


def is_gradual_variation(
    cx: CellComplex,
    source: Curve,
    target: Curve,
    region: SurfaceRegion | None = None,
) -> DeformationStep:
    """Check whether two paths are gradually varied.

    Open paths must have end points at distance at most one. Every non-end
    vertex of either path must lie on the other path or in a cell, inside the
    union of both paths, that reaches the other path. Every non-end edge of
    either path that the other path lacks must lie in such a cell that also
    carries an edge of the other path missing from this one; this second
    clause is waived when the other path is a single point.

    Args:
        cx: Complex providing the cells.
        source: First path.
        target: Second path.
        region: Restrict witness cells to those of a region.

    Returns:
        The step with its witnesses, or a falsy step naming the failure.
    """
    for part in (source, target):
        cx.graph.path(part.vertices, closed=part.closed)
    union = source.vertex_set | target.vertex_set
    pool = region.cells if region is not None else range(len(cx.cells))
    candidates = [i for i in pool if cx.cells[i].vertex_set <= union]

    source_ends = source.as_path().ends
    target_ends = target.as_path().ends
    if source_ends and target_ends:
        for a, b in zip(source_ends, target_ends, strict=True):
            if not cx.graph.within_one(a, b):
                return DeformationStep(
                    source, target, failure=f"end points {a} and {b} are not adjacent"
                )

    vertex_hits: list[tuple[str, int]] = []
    edge_hits: list[tuple[tuple[str, str], int]] = []
    for moving, other in ((source, target), (target, source)):
        verts, edges, failure = _clauses(cx, moving, other, candidates)
        if failure is not None:
            return DeformationStep(source, target, failure=failure)
        vertex_hits.extend(verts)
        edge_hits.extend(edges)
    return DeformationStep(source, target, tuple(vertex_hits), tuple(edge_hits))


@dataclass(frozen=True)
class CrossingLocus:
    """A maximal stretch shared by two paths and how the second passes it."""

    arc: tuple[str, ...]
    entry: Side | None = None
    exit: Side | None = None
    union_boundary: tuple[str, ...] | None = None

    @property
    def crosses(self) -> bool:
        """Whether the other path enters and leaves on different sides."""
        if self.entry is None or self.exit is None:
            return False
        if Side.ON in (self.entry, self.exit):
            return False
        return self.entry != self.exit

    def to_dict(self) -> dict[str, Any]:
        """Return the locus as a dictionary."""
        return {
            "arc": list(self.arc),
            "entry": str(self.entry) if self.entry else None,
            "exit": str(self.exit) if self.exit else None,
            "crosses": self.crosses,
            "union_boundary": list(self.union_boundary)
            if self.union_boundary
            else None,
        }


@dataclass(frozen=True)
class CrossOverResult:
    """Every shared locus of two paths, with its crossing verdict."""

    loci: tuple[CrossingLocus, ...] = ()

    @property
    def crosses(self) -> bool:
        """Whether any locus is a crossing."""
        return any(locus.crosses for locus in self.loci)

    def to_dict(self) -> dict[str, Any]:
        """Return the result as a dictionary."""
        return {"crosses": self.crosses, "loci": [x.to_dict() for x in self.loci]}


@dataclass(frozen=True)
class SideVariation:
    """Gradual variation in which neither path crosses over the other."""

    step: DeformationStep
    crossing: CrossOverResult | None = None
    notes: tuple[str, ...] = ()

    @property
    def sided(self) -> bool:
        """Whether the paths are gradually varied without crossing."""
        return self.step.ok and self.crossing is not None and not self.crossing.crosses

    def __bool__(self) -> bool:
        return self.sided

    def to_dict(self) -> dict[str, Any]:
        """Return the check as a dictionary."""
        return {
            "sided": self.sided,
            "step": self.step.to_dict(),
            "crossing": self.crossing.to_dict() if self.crossing else None,
            "notes": list(self.notes),
        }


class _SurfaceView:
    """Caches disks, regularity and moves for repeated checks on one region."""

    def __init__(self, region: SurfaceRegion, atlas: OrientationAtlas | None) -> None:
        self.region = region
        self.complex = region.complex
        self.atlas = atlas if atlas is not None else build_orientation_atlas(region)
        self.inner = (
            region.vertices - region.boundary()
            if region.is_semi_surface()
            else frozenset()
        )
        self._disks: dict[str, NeighborhoodDisk] = {}
        self._regular: dict[str, bool] = {}
        self._moves: dict[Curve, list[tuple[int, Curve]]] = {}
        self._sides: dict[tuple[Curve, Curve], SideVariation] = {}
        self.cell_index = {self.complex.cells[i]: i for i in region.cells}

    def require_orientable(self) -> None:
        if not self.atlas.consistent:
            raise UnsupportedInputError(
                "side classification needs an orientable region; "
                f"{len(self.atlas.conflicts)} edges cannot be oriented consistently"
            )

    def disk(self, vertex: str) -> NeighborhoodDisk:
        if vertex not in self._disks:
            self._disks[vertex] = neighborhood(self.region, vertex, self.atlas)
        return self._disks[vertex]

    def regular(self, vertex: str) -> bool:
        if vertex not in self._regular:
            self._regular[vertex] = is_regular_point(self.region, vertex)
        return self._regular[vertex]

    def moves(self, curve: Curve) -> list[tuple[int, Curve]]:
        """Single-cell XorSum successors of a path, in cell id order."""
        if curve not in self._moves:
            edges = curve.edge_set()
            found = []
            for i in self.region.cells:
                cell = self.complex.cells[i]
                if not cell.edge_set() & edges:
                    continue
                try:
                    found.append((i, xor_sum(self.complex, curve, cell)))
                except StepInvalidError:
                    continue
            self._moves[curve] = found
        return self._moves[curve]

    def side(self, source: Curve, target: Curve) -> SideVariation:
        key = (source, target)
        if key not in self._sides:
            self._sides[key] = _side_variation(self, source, target, with_union=False)
        return self._sides[key]


def _loci(source: Curve, other: Curve) -> list[tuple[str, ...]]:
    """Shared stretches of two paths, each oriented along ``source``."""
    path = source.as_path()
    shared = path.vertex_set & other.vertex_set
    shared_edges = path.edge_set() & other.edge_set()
    adjacency: dict[str, list[str]] = {v: [] for v in shared}
    for e in shared_edges:
        a, b = tuple(e)
        adjacency[a].append(b)
        adjacency[b].append(a)

    seen: set[str] = set()
    loci = []
    for start in path.vertices:
        if start not in shared or start in seen:
            continue
        component = {start}
        queue = deque([start])
        while queue:
            for nxt in adjacency[queue.popleft()]:
                if nxt not in component:
                    component.add(nxt)
                    queue.append(nxt)
        seen |= component
        if len(component) == 1:
            loci.append((start,))
            continue
        ends = [v for v in component if len(adjacency[v]) == 1]
        if not ends:
            loci.append(tuple(path.vertices))
            continue
        arc = [ends[0], adjacency[ends[0]][0]]
        while len(arc) < len(component):
            arc.append(next(v for v in adjacency[arc[-1]] if v != arc[-2]))
        if path.successor(arc[0]) != arc[1]:
            arc.reverse()
        loci.append(tuple(arc))
    return loci


def _flank(path: VertexPath, vertex: str, inward: str | None) -> str | None:
    options = [path.predecessor(vertex), path.successor(vertex)]
    rest = [v for v in options if v is not None and v != inward]
    return rest[0] if len(rest) == 1 else None


def _classify_locus(
    view: _SurfaceView,
    source: VertexPath,
    other: VertexPath,
    arc: tuple[str, ...],
    with_union: bool,
) -> CrossingLocus:
    if source.closed and source.edge_set() <= other.edge_set():
        return CrossingLocus(arc)
    for vertex in arc:
        if not view.regular(vertex):
            raise UnsupportedInputError(f"shared point {vertex} is not a regular point")

    first, last = arc[0], arc[-1]
    came = source.predecessor(first)
    goes = source.successor(last)
    if len(arc) == 1:
        probe_in, probe_out = other.predecessor(first), other.successor(first)
    else:
        probe_in = _flank(other, first, arc[1])
        probe_out = _flank(other, last, arc[-2])
    if came is None or goes is None or probe_in is None or probe_out is None:
        return CrossingLocus(arc)
    if len(arc) == 1:
        through_in = through_out = (came, first, goes)
    else:
        through_in = (came, first, arc[1])
        through_out = (arc[-2], last, goes)

    try:
        entry = side_of(view.disk(first), through_in, probe_in)
        leave = side_of(view.disk(last), through_out, probe_out)
    except InputError as err:
        raise UnsupportedInputError(f"cannot place paths around {arc}: {err}") from err

    boundary = None
    if with_union and len(arc) > 1 and set(arc) <= view.inner:
        try:
            disk = union_neighborhood(view.region, arc, view.atlas)
            boundary = disk.boundary.vertices
        except DiscreteTopologyError as err:
            _LOGGER.debug("No union neighbourhood along %s: %s", arc, err)
    return CrossingLocus(arc, entry, leave, boundary)


def _crosses(
    view: _SurfaceView, source: Curve, other: Curve, with_union: bool
) -> CrossOverResult:
    view.require_orientable()
    path, second = source.as_path(), other.as_path()
    loci = tuple(
        _classify_locus(view, path, second, arc, with_union)
        for arc in _loci(path, second)
    )
    return CrossOverResult(loci)


def crosses_over(
    region: SurfaceRegion,
    source: Curve,
    other: Curve,
    atlas: OrientationAtlas | None = None,
) -> CrossOverResult:
    """Decide whether ``other`` crosses over ``source``.

    Each maximal shared stretch is examined at both of its ends: ``other``
    crosses there when the vertex it arrives from and the vertex it leaves to
    lie on different sides of ``source`` in the oriented links. Shared
    stretches at open path ends are never crossings.

    Raises:
        UnsupportedInputError: If a shared point is irregular or the region
            is not orientable.
    """
    for part in (source, other):
        region.graph.path(part.vertices, closed=part.closed)
    return _crosses(_SurfaceView(region, atlas), source, other, with_union=True)


def _orientation_notes(
    view: _SurfaceView, source: Curve, step: DeformationStep
) -> tuple[str, ...]:
    travel = source.as_path()
    along: list[int] = []
    against: list[int] = []
    pairs = list(zip(travel.vertices, travel.vertices[1:], strict=False))
    if travel.closed:
        pairs.append((travel.vertices[-1], travel.vertices[0]))
    for cell_id in step.witness_cells:
        edges = view.complex.cells[cell_id].edge_set()
        for a, b in pairs:
            if frozenset((a, b)) in edges:
                (along if view.atlas.traverses(cell_id, a, b) else against).append(
                    cell_id
                )
                break
    if along and against:
        note = (
            "witness cells disagree in orientation along the source path: "
            f"{along} follow it, {against} oppose it"
        )
        _LOGGER.debug(note)
        return (note,)
    return ()


def _side_variation(
    view: _SurfaceView, source: Curve, target: Curve, with_union: bool
) -> SideVariation:
    step = is_gradual_variation(view.complex, source, target, view.region)
    if not step:
        return SideVariation(step)
    crossing = _crosses(view, source, target, with_union)
    return SideVariation(step, crossing, _orientation_notes(view, source, step))


def is_side_gradual_variation(
    region: SurfaceRegion,
    source: Curve,
    target: Curve,
    atlas: OrientationAtlas | None = None,
) -> SideVariation:
    """Gradual variation in which ``target`` does not cross over ``source``."""
    return _side_variation(_SurfaceView(region, atlas), source, target, with_union=True)


@dataclass(frozen=True)
class HomotopyCertificate:
    """A sequence of paths, each side-gradually varied to the next."""

    curves: tuple[Curve, ...]
    steps: tuple[SideVariation, ...]
    moves: tuple[int | None, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def validate(
        self,
        region: SurfaceRegion,
        atlas: OrientationAtlas | None = None,
        *,
        point: str | None = None,
    ) -> bool:
        """Recompute every step from scratch.

        Args:
            region: Region the certificate was produced on.
            atlas: Orientation to use; rebuilt when omitted.
            point: For contractions, the point every cycle must keep; also
                checks that dropped vertices never come back and that the
                sequence ends at the point.
        """
        view = _SurfaceView(region, atlas)
        for source, target in zip(self.curves, self.curves[1:], strict=False):
            if not _side_variation(view, source, target, with_union=False).sided:
                return False
        if point is None:
            return True
        if self.curves[-1] != VertexPath((point,)):
            return False
        dropped: set[str] = set()
        for before, after in zip(self.curves, self.curves[1:-1], strict=False):
            if point not in after.vertex_set or after.vertex_set & dropped:
                return False
            dropped |= before.vertex_set - after.vertex_set
        return True

    def to_dict(self) -> dict[str, Any]:
        """Return the certificate as a dictionary."""
        return {
            "steps": len(self.steps),
            "curves": [_curve_to_data(c) for c in self.curves],
            "moves": list(self.moves),
            "witness_cells": [list(s.step.witness_cells) for s in self.steps],
        }


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a bounded homotopy search."""

    verdict: Verdict
    certificate: HomotopyCertificate | None = None
    explored: int = 0
    reason: str | None = None

    def to_dict(self) -> dict[str, Any]:
        """Return the result as a dictionary."""
        return {
            "verdict": str(self.verdict),
            "explored": self.explored,
            "reason": self.reason,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


_Trace = list[tuple[int | None, Curve, SideVariation]]


class _Contraction:
    """Iterative deepening over single-cell moves that keep a point."""

    def __init__(self, view: _SurfaceView, point: str, budget: Budget) -> None:
        self.view = view
        self.point = point
        self.target = VertexPath((point,))
        self.budget = budget
        self.explored = 0
        self._failed: dict[tuple[Curve, frozenset[str]], int] = {}

    def search(
        self, depth: int, curve: Curve, dropped: frozenset[str]
    ) -> _Trace | None:
        self.explored += 1
        if curve in self.view.cell_index:
            final = self.view.side(curve, self.target)
            if final.sided:
                return [(None, self.target, final)]
        if depth <= 1:
            return None
        key = (curve, dropped)
        if self._failed.get(key, 0) >= depth:
            return None
        for cell_id, nxt in self.view.moves(curve):
            if not nxt.closed or self.point not in nxt.vertex_set:
                continue
            if len(nxt) > self.budget.max_cycle_len or nxt.vertex_set & dropped:
                continue
            step = self.view.side(curve, nxt)
            if not step.sided:
                continue
            rest = self.search(
                depth - 1, nxt, dropped | (curve.vertex_set - nxt.vertex_set)
            )
            if rest is not None:
                return [(cell_id, nxt, step), *rest]
        self._failed[key] = max(self._failed.get(key, 0), depth)
        return None


class _Sweep:
    """Iterative deepening over single-cell moves towards a fixed target."""

    def __init__(self, view: _SurfaceView, goal: Curve, budget: Budget) -> None:
        self.view = view
        self.goal = goal
        self.budget = budget
        self.explored = 0
        self._failed: dict[Curve, int] = {}

    def _admissible(self, nxt: Curve) -> bool:
        if nxt.closed != self.goal.closed or len(nxt) > self.budget.max_cycle_len:
            return False
        if self.goal.closed:
            return True
        return nxt.vertices[0] == self.goal.vertices[0] and (
            nxt.vertices[-1] == self.goal.vertices[-1]
        )

    def search(self, depth: int, curve: Curve) -> _Trace | None:
        self.explored += 1
        if curve == self.goal:
            return []
        if depth == 0 or self._failed.get(curve, -1) >= depth:
            return None
        for cell_id, nxt in self.view.moves(curve):
            if not self._admissible(nxt):
                continue
            step = self.view.side(curve, nxt)
            if not step.sided:
                continue
            rest = self.search(depth - 1, nxt)
            if rest is not None:
                return [(cell_id, nxt, step), *rest]
        self._failed[curve] = max(self._failed.get(curve, -1), depth)
        return None


def _certificate(start: Curve, trace: _Trace) -> HomotopyCertificate:
    return HomotopyCertificate(
        curves=(start, *(c for _, c, _ in trace)),
        steps=tuple(s for _, _, s in trace),
        moves=tuple(m for m, _, _ in trace),
    )


def _contract(
    view: _SurfaceView, cycle: VertexCycle, point: str, budget: Budget
) -> SearchResult:
    view.require_orientable()
    runner = _Contraction(view, point, budget)
    for depth in range(1, budget.max_steps + 1):
        trace = runner.search(depth, cycle, frozenset())
        if trace is not None:
            _LOGGER.debug(
                "Contracted %s to %s in %d steps", cycle.to_list(), point, len(trace)
            )
            return SearchResult(
                Verdict.VERIFIED, _certificate(cycle, trace), runner.explored
            )
    return SearchResult(
        Verdict.INDETERMINATE,
        explored=runner.explored,
        reason=f"no contraction within {budget.max_steps} steps and cycles of at "
        f"most {budget.max_cycle_len} vertices",
    )


def contract_to_point(
    region: SurfaceRegion,
    cycle: VertexCycle,
    point: str,
    budget: Budget | None = None,
    atlas: OrientationAtlas | None = None,
) -> SearchResult:
    """Search for a side-gradual contraction of a cycle to one of its points.

    Moves take the XorSum with a single cell, keep the point, never bring back
    a vertex an earlier cycle dropped, and stay within the length budget. The
    last step goes from a cell to the point.

    Raises:
        PreconditionError: If the point is not on the cycle.
        UnsupportedInputError: If the region is not orientable.
    """
    budget = budget or Budget()
    region.graph.cycle(cycle.vertices)
    if point not in cycle.vertex_set:
        raise PreconditionError([f"point {point} is not on the cycle"])
    result = _contract(_SurfaceView(region, atlas), cycle, point, budget)
    if result.verdict is Verdict.INDETERMINATE:
        _LOGGER.warning("Contraction of %s is indeterminate", cycle.to_list())
    return result


def _sweep(
    view: _SurfaceView, source: Curve, target: Curve, budget: Budget
) -> SearchResult:
    view.require_orientable()
    runner = _Sweep(view, target, budget)
    for depth in range(0, budget.max_steps + 1):
        trace = runner.search(depth, source)
        if trace is not None:
            return SearchResult(
                Verdict.VERIFIED, _certificate(source, trace), runner.explored
            )
    return SearchResult(
        Verdict.INDETERMINATE,
        explored=runner.explored,
        reason=f"no deformation within {budget.max_steps} steps",
    )


def find_homotopy(
    region: SurfaceRegion,
    source: Curve,
    target: Curve,
    budget: Budget | None = None,
    atlas: OrientationAtlas | None = None,
) -> SearchResult:
    """Search for side-gradual single-cell moves turning one path into another.

    Open paths must share both end points; closed paths are matched as cycles.

    Raises:
        PreconditionError: If the paths cannot be deformed into each other by
            end-fixing moves.
    """
    budget = budget or Budget()
    for part in (source, target):
        region.graph.path(part.vertices, closed=part.closed)
    if source.closed != target.closed:
        raise PreconditionError(["one path is closed and the other is open"])
    if not source.closed and source.as_path().ends != target.as_path().ends:
        raise PreconditionError(["open paths must share both end points"])
    if source.closed:
        graph = region.graph
        source = graph.cycle(source.vertices)
        target = graph.cycle(target.vertices)
    result = _sweep(_SurfaceView(region, atlas), source, target, budget)
    if result.verdict is Verdict.INDETERMINATE:
        _LOGGER.warning("No homotopy found between the two paths")
    return result


@dataclass(frozen=True)
class InstanceOutcome:
    """Search outcome for one cycle and its chosen point or points."""

    cycle: VertexCycle
    points: tuple[str, ...]
    verdict: Verdict
    steps: int | None = None
    explored: int = 0

    def to_dict(self) -> dict[str, Any]:
        """Return the outcome as a dictionary."""
        return {
            "cycle": self.cycle.to_list(),
            "points": list(self.points),
            "verdict": str(self.verdict),
            "steps": self.steps,
            "explored": self.explored,
        }


def _combine(verdicts: Iterable[Verdict]) -> Verdict:
    seen = set(verdicts)
    if Verdict.REFUTED in seen:
        return Verdict.REFUTED
    if seen <= {Verdict.VERIFIED}:
        return Verdict.VERIFIED
    return Verdict.INDETERMINATE


@dataclass(frozen=True)
class SimplyConnectedReport:
    """Per-instance and overall verdicts of a simple-connectivity check."""

    method: str
    budget: Budget
    instances: tuple[InstanceOutcome, ...] = ()
    witnesses: tuple[VertexCycle, ...] = ()

    @property
    def verdict(self) -> Verdict:
        """Refuted if any witness exists, verified if every instance is."""
        return _combine(i.verdict for i in self.instances)

    def cycle_verdicts(self) -> dict[VertexCycle, Verdict]:
        """Verdict per cycle, combining all its instances."""
        grouped: dict[VertexCycle, list[Verdict]] = {}
        for outcome in self.instances:
            grouped.setdefault(outcome.cycle, []).append(outcome.verdict)
        return {cycle: _combine(v) for cycle, v in grouped.items()}

    def to_dict(self) -> dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "method": self.method,
            "verdict": str(self.verdict),
            "budget": self.budget.to_dict(),
            "cycles": len(self.cycle_verdicts()),
            "instances": [i.to_dict() for i in self.instances],
            "witnesses": [c.to_list() for c in self.witnesses],
        }


def _refutes(view: _SurfaceView, cycle: VertexCycle) -> bool:
    """Whether a cycle is a boundary-free semi-curve that fails to separate."""
    if cycle.vertex_set - view.inner or not is_semi_curve(view.complex, cycle):
        return False
    return oracle_separation(view.region, cycle, SeparationMode.PSEUDO) == 1


def _enumerate_cycles(region: SurfaceRegion, budget: Budget) -> tuple[VertexCycle, ...]:
    return tuple(
        region.graph.cycle(c.vertices)
        for c in region.subgraph.simple_cycles(budget.max_cycle_len)
    )


class _Refuter:
    def __init__(self, view: _SurfaceView) -> None:
        self.view = view
        self.cache: dict[VertexCycle, bool] = {}

    def __call__(self, cycle: VertexCycle, verdict: Verdict) -> Verdict:
        if verdict is not Verdict.INDETERMINATE:
            return verdict
        if cycle not in self.cache:
            self.cache[cycle] = _refutes(self.view, cycle)
        return Verdict.REFUTED if self.cache[cycle] else verdict

    @property
    def witnesses(self) -> tuple[VertexCycle, ...]:
        return tuple(c for c, hit in self.cache.items() if hit)


def check_contractible(
    region: SurfaceRegion,
    budget: Budget | None = None,
    atlas: OrientationAtlas | None = None,
) -> SimplyConnectedReport:
    """Try to contract every short cycle of the region to each of its points.

    An indeterminate cycle is refuted when it is a semi-curve avoiding the
    boundary whose complement stays connected.

    Raises:
        UnsupportedInputError: If the region is not orientable.
    """
    budget = budget or Budget()
    view = _SurfaceView(region, atlas)
    view.require_orientable()
    refute = _Refuter(view)
    outcomes = []
    for cycle in _enumerate_cycles(region, budget):
        for point in cycle.canonical:
            result = _contract(view, cycle, point, budget)
            outcomes.append(
                InstanceOutcome(
                    cycle,
                    (point,),
                    refute(cycle, result.verdict),
                    len(result.certificate) if result.certificate else None,
                    result.explored,
                )
            )
    report = SimplyConnectedReport(
        "contraction", budget, tuple(outcomes), refute.witnesses
    )
    _LOGGER.debug("Contraction check finished: %s", report.verdict)
    return report


def _arcs(cycle: VertexCycle, first: int, second: int) -> tuple[VertexPath, VertexPath]:
    seq = cycle.canonical
    n = len(seq)
    forward = seq[first : second + 1]
    backward = tuple(seq[(first - k) % n] for k in range(n - (second - first) + 1))
    return VertexPath(forward), VertexPath(backward)


def check_arc_sweepable(
    region: SurfaceRegion,
    budget: Budget | None = None,
    atlas: OrientationAtlas | None = None,
) -> SimplyConnectedReport:
    """Try to sweep each arc of every short cycle onto the complementary arc.

    For every pair of points on a cycle the arc running one way between them
    must be deformable, with both ends fixed, into the arc running the other
    way.

    Raises:
        UnsupportedInputError: If the region is not orientable.
    """
    budget = budget or Budget()
    view = _SurfaceView(region, atlas)
    view.require_orientable()
    refute = _Refuter(view)
    outcomes = []
    for cycle in _enumerate_cycles(region, budget):
        n = len(cycle)
        for first in range(n):
            for second in range(first + 1, n):
                forward, backward = _arcs(cycle, first, second)
                result = _sweep(view, forward, backward, budget)
                outcomes.append(
                    InstanceOutcome(
                        cycle,
                        (cycle.canonical[first], cycle.canonical[second]),
                        refute(cycle, result.verdict),
                        len(result.certificate) if result.certificate else None,
                        result.explored,
                    )
                )
    report = SimplyConnectedReport(
        "arc-sweep", budget, tuple(outcomes), refute.witnesses
    )
    _LOGGER.debug("Arc sweeping check finished: %s", report.verdict)
    return report


@dataclass(frozen=True)
class CrosscheckReport:
    """Both simple-connectivity checks and the cycles where they disagree."""

    contraction: SimplyConnectedReport
    arc_sweep: SimplyConnectedReport
    disagreements: tuple[tuple[VertexCycle, Verdict, Verdict], ...] = ()

    @property
    def consistent(self) -> bool:
        """Whether no cycle is verified by one check and refuted by the other."""
        return not self.disagreements

    def to_dict(self) -> dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "consistent": self.consistent,
            "contraction": str(self.contraction.verdict),
            "arc_sweep": str(self.arc_sweep.verdict),
            "disagreements": [
                {"cycle": c.to_list(), "contraction": str(b), "arc_sweep": str(s)}
                for c, b, s in self.disagreements
            ],
        }


def crosscheck_simply_connected(
    region: SurfaceRegion,
    budget: Budget | None = None,
    atlas: OrientationAtlas | None = None,
) -> CrosscheckReport:
    """Run both simple-connectivity checks and compare them cycle by cycle."""
    budget = budget or Budget()
    contraction = check_contractible(region, budget, atlas)
    sweep = check_arc_sweepable(region, budget, atlas)
    by_sweep = sweep.cycle_verdicts()
    clash = {Verdict.VERIFIED, Verdict.REFUTED}
    disagreements = tuple(
        (cycle, verdict, by_sweep[cycle])
        for cycle, verdict in contraction.cycle_verdicts().items()
        if cycle in by_sweep and {verdict, by_sweep[cycle]} == clash
    )
    if disagreements:
        _LOGGER.warning(
            "Simple-connectivity checks disagree on %d cycles", len(disagreements)
        )
    return CrosscheckReport(contraction, sweep, disagreements)
