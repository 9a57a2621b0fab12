"""Point and curve classification on surface regions."""

__all__ = [
    "NeighborhoodDisk",
    "TwoCellWitness",
    "OrientationAtlas",
    "UnionDisk",
    "is_semi_curve",
    "is_discrete_curve",
    "contained_cell",
    "neighborhood",
    "is_regular_point",
    "is_simple_surface_point",
    "two_cell_witness",
    "build_orientation_atlas",
    "side_of",
    "union_neighborhood",
]

import logging
from collections import Counter, deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

from .complex import CellComplex, SurfaceRegion
from .exceptions import (
    InputError,
    NoDiskError,
    NotInteriorEdgeError,
    PreconditionError,
    SurfaceConsistencyError,
    UnsupportedInputError,
)
from .models import Curve, Edge, Side, VertexCycle, VertexPath, make_edge

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())


def _passes(travel: Sequence[str], u: str, v: str) -> bool:
    """Whether a closed travel sequence steps directly from u to v."""
    if u not in travel:
        return False
    return travel[(travel.index(u) + 1) % len(travel)] == v


def _directed_edges(travel: Sequence[str]) -> list[tuple[str, str]]:
    return [(travel[i], travel[(i + 1) % len(travel)]) for i in range(len(travel))]


def is_semi_curve(cx: CellComplex, curve: Curve) -> bool:
    """Whether a path is an induced path of the graph (no chords).

    Raises:
        InputError: If the path uses a non-edge or an unknown vertex.
    """
    path = curve.as_path()
    cx.graph.path(path.vertices, closed=path.closed)
    induced = cx.graph.induced_subgraph(path.vertices)
    return induced.edge_set == path.edge_set()


def contained_cell(cx: CellComplex, curve: Curve) -> int | None:
    """Id of the first surface-cell whose vertices all lie on the curve."""
    vertices = curve.vertex_set
    for i, cell in enumerate(cx.cells):
        if cell.vertex_set <= vertices:
            return i
    return None


def is_discrete_curve(cx: CellComplex, curve: Curve) -> bool:
    """A semi-curve that contains no surface-cell."""
    return is_semi_curve(cx, curve) and contained_cell(cx, curve) is None


@dataclass(frozen=True)
class NeighborhoodDisk:
    """Cells around a point and the ring of vertices they leave around it.

    ``link`` is set for inner points whose cells close up around them.
    ``chain`` is set for boundary points whose cells form a single fan; it
    is the open ring running from one boundary neighbour to the other.
    """

    center: str
    cells: tuple[int, ...]
    regular: bool
    link: VertexCycle | None = None
    chain: VertexPath | None = None

    @property
    def ring(self) -> tuple[str, ...] | None:
        """Link or chain vertices in travel order."""
        if self.link is not None:
            return self.link.vertices
        if self.chain is not None:
            return self.chain.vertices
        return None

    def to_dict(self) -> dict[str, Any]:
        """Return the disk as a dictionary."""
        return {
            "center": self.center,
            "cells": list(self.cells),
            "regular": self.regular,
            "link": self.link.to_list() if self.link else None,
            "chain": self.chain.to_list() if self.chain else None,
        }


@dataclass(frozen=True, eq=False)
class OrientationAtlas:
    """A travel direction for every cell of a region.

    Neighbouring cells traverse a shared edge in opposite directions
    wherever that is possible; ``conflicts`` lists edges where it is not.
    """

    travels: dict[int, tuple[str, ...]] = field(default_factory=dict)
    conflicts: tuple[Edge, ...] = ()

    @property
    def consistent(self) -> bool:
        """Whether the region is orientable under this atlas."""
        return not self.conflicts

    def travel(self, cell_id: int) -> tuple[str, ...]:
        """Vertices of a cell in its assigned direction.

        Raises:
            InputError: If the cell is not covered by the atlas.
        """
        try:
            return self.travels[cell_id]
        except KeyError as err:
            raise InputError(
                f"Cell #{cell_id} is not in the orientation atlas"
            ) from err

    def traverses(self, cell_id: int, u: str, v: str) -> bool:
        """Whether the cell's assigned direction passes from u to v."""
        return _passes(self.travel(cell_id), u, v)

    def reversed(self) -> "OrientationAtlas":
        """The atlas with every cell travelled the other way."""
        flipped = {
            i: (t[0], *reversed(t[1:])) for i, t in self.travels.items()
        }
        return OrientationAtlas(flipped, self.conflicts)

    def to_dict(self) -> dict[str, Any]:
        """Return the atlas as a dictionary."""
        return {
            "consistent": self.consistent,
            "cells": {str(i): list(t) for i, t in sorted(self.travels.items())},
            "conflicts": [sorted(e) for e in self.conflicts],
        }


def build_orientation_atlas(region: SurfaceRegion) -> OrientationAtlas:
    """Orient the region's cells so shared edges are crossed in opposite ways.

    Each edge-connected group of cells is seeded with the stored direction of
    its lowest cell and propagated breadth first. A non-orientable region
    yields an atlas with ``consistent`` false.
    """
    cx = region.complex
    travels: dict[int, tuple[str, ...]] = {}
    conflicts: set[Edge] = set()
    for seed in region.cells:
        if seed in travels:
            continue
        travels[seed] = cx.cells[seed].vertices
        queue = deque([seed])
        while queue:
            i = queue.popleft()
            for a, b in _directed_edges(travels[i]):
                for j in region.cells_on_edge(make_edge(a, b)):
                    if j == i:
                        continue
                    if j not in travels:
                        cell = cx.cells[j]
                        travels[j] = (
                            cell.vertices
                            if cell.traverses(b, a)
                            else cell.reversed().vertices
                        )
                        queue.append(j)
                    elif not _passes(travels[j], b, a):
                        conflicts.add(make_edge(a, b))
    ordered = cx.graph.sort_edges(conflicts)
    if ordered:
        _LOGGER.debug("Region is not orientable; %d conflicting edges", len(ordered))
    return OrientationAtlas(travels, ordered)


def _fan_arcs(
    region: SurfaceRegion, point: str, atlas: OrientationAtlas | None
) -> list[tuple[str, ...]]:
    arcs = []
    for i in region.cells_containing(point):
        travel = atlas.travel(i) if atlas else region.complex.cells[i].vertices
        k = travel.index(point)
        arcs.append(travel[k + 1 :] + travel[:k])
    return arcs


def _chain_arcs(
    arcs: list[tuple[str, ...]], order: Callable[[str], int]
) -> tuple[tuple[str, ...], bool] | None:
    """Join fan arcs end to end into one ring; None if they do not form one."""
    ends: dict[str, list[int]] = {}
    for n, arc in enumerate(arcs):
        ends.setdefault(arc[0], []).append(n)
        ends.setdefault(arc[-1], []).append(n)
    if any(len(ids) > 2 for ids in ends.values()):
        return None
    open_ends = sorted((v for v, ids in ends.items() if len(ids) == 1), key=order)
    closed = not open_ends
    start = arcs[0][0] if closed else open_ends[0]

    used: list[int] = []
    forward: list[bool] = []
    seq = [start]
    current = start
    while True:
        free = [n for n in ends[current] if n not in used]
        if not free:
            break
        n = free[0]
        arc = arcs[n] if arcs[n][0] == current else tuple(reversed(arcs[n]))
        used.append(n)
        forward.append(arcs[n][0] == current)
        seq.extend(arc[1:])
        current = arc[-1]

    if len(used) != len(arcs):
        return None
    if closed:
        if seq[-1] != start:
            return None
        seq.pop()
    if len(set(seq)) != len(seq) or (closed and len(seq) < 3):
        return None
    if not forward[0]:
        seq = [seq[0], *reversed(seq[1:])] if closed else list(reversed(seq))
    return tuple(seq), closed


def neighborhood(
    region: SurfaceRegion, point: str, atlas: OrientationAtlas | None = None
) -> NeighborhoodDisk:
    """Cells containing a point and the ring they form around it.

    Args:
        region: Surface region holding the point.
        point: Vertex to inspect.
        atlas: Cell directions to orient the ring; stored directions when
            omitted.

    Raises:
        InputError: If the point is not in the region.
        NoDiskError: If no cell of the region contains the point.
    """
    graph = region.graph
    graph.order(point)
    if point not in region.vertices:
        raise InputError(f"{point!r} is not in the region")
    cells = region.cells_containing(point)
    if not cells:
        raise NoDiskError(f"{point!r} lies in no surface-cell of the region")
    regular = region.cells_line_connected(cells)
    joined = _chain_arcs(_fan_arcs(region, point, atlas), graph.order)
    if joined is None:
        return NeighborhoodDisk(point, cells, regular)
    seq, closed = joined
    if closed:
        return NeighborhoodDisk(
            point, cells, regular, link=VertexCycle.from_sequence(seq, graph.order)
        )
    return NeighborhoodDisk(point, cells, regular, chain=VertexPath(seq))


def is_regular_point(region: SurfaceRegion, point: str) -> bool:
    """Whether the cells containing a point are connected through shared edges.

    A point in no cell is not regular.
    """
    region.graph.order(point)
    cells = region.cells_containing(point)
    return bool(cells) and region.cells_line_connected(cells)


def is_simple_surface_point(region: SurfaceRegion, point: str) -> bool:
    """Whether a point has a link cycle that is itself a discrete curve."""
    try:
        disk = neighborhood(region, point)
    except NoDiskError:
        return False
    if disk.link is None:
        return False
    return is_discrete_curve(region.complex, disk.link)


@dataclass(frozen=True)
class TwoCellWitness:
    """Cells certifying the local shape at a point of degree two."""

    point: str
    neighbors: tuple[str, str]
    cells: tuple[int, ...]
    kind: str

    def to_dict(self) -> dict[str, Any]:
        """Return the witness as a dictionary."""
        return {
            "point": self.point,
            "neighbors": list(self.neighbors),
            "cells": list(self.cells),
            "kind": self.kind,
        }


def two_cell_witness(region: SurfaceRegion, point: str) -> TwoCellWitness:
    """Cells explaining a point with exactly two neighbours in a surface.

    If the two neighbours are adjacent the triangle they span with the point
    must be a cell. Otherwise two cells through the point and both
    neighbours are returned, or the single such cell.

    Raises:
        PreconditionError: If the point does not have exactly two neighbours.
        SurfaceConsistencyError: If the expected cells are missing.
    """
    neighbors = region.subgraph.neighbors(point)
    if len(neighbors) != 2:
        raise PreconditionError(
            [f"{point!r} has {len(neighbors)} neighbours in the region, not two"]
        )
    first, second = neighbors
    pair = (first, second)
    triple = frozenset((first, point, second))
    cx = region.complex
    if region.graph.adjacent(first, second):
        for i in region.cells_containing(point):
            if cx.cells[i].vertex_set == triple:
                return TwoCellWitness(point, pair, (i,), "triangle")
        raise SurfaceConsistencyError(
            f"triangle {first}-{point}-{second} is not a surface-cell"
        )
    through = [
        i for i in region.cells_containing(point) if triple <= cx.cells[i].vertex_set
    ]
    if len(through) >= 2:
        return TwoCellWitness(point, pair, tuple(through[:2]), "two-cells")
    if through:
        return TwoCellWitness(point, pair, tuple(through), "single-cell")
    raise SurfaceConsistencyError(
        f"no surface-cell contains {first}, {point} and {second}"
    )


def side_of(
    disk: NeighborhoodDisk, through: tuple[str, str, str], probe: str
) -> Side:
    """Which side of a curve passing ``u -> x -> v`` a probe vertex lies on.

    The probe is LEFT when walking the oriented ring forward from ``u``
    meets it before ``v``, and RIGHT otherwise. An open chain is closed
    through an exterior gap for the walk.

    Raises:
        InputError: If ``x`` is not the disk centre or a vertex is off the ring.
        UnsupportedInputError: If the disk has no ring.
    """
    u, x, v = through
    if x != disk.center:
        raise InputError(f"{x!r} is not the centre of the disk at {disk.center!r}")
    ring = disk.ring
    if ring is None:
        raise UnsupportedInputError(f"{disk.center!r} has no oriented link")
    for name in (u, v, probe):
        if name not in ring:
            raise InputError(f"{name!r} is not on the link of {disk.center!r}")
    if u == v:
        raise InputError(f"curve enters and leaves {x!r} through the same vertex")
    if probe in (u, v):
        return Side.ON
    walk: list[str | None] = list(ring)
    if disk.link is None:
        walk.append(None)
    start = walk.index(u)
    for step in range(1, len(walk)):
        seen = walk[(start + step) % len(walk)]
        if seen == probe:
            return Side.LEFT
        if seen == v:
            return Side.RIGHT
    return Side.RIGHT


@dataclass(frozen=True)
class UnionDisk:
    """Union of the neighbourhoods along an arc, bounded by a simple cycle."""

    centers: tuple[str, ...]
    cells: tuple[int, ...]
    boundary: VertexCycle

    def to_dict(self) -> dict[str, Any]:
        """Return the union disk as a dictionary."""
        return {
            "centers": list(self.centers),
            "cells": list(self.cells),
            "boundary": self.boundary.to_list(),
        }


def union_neighborhood(
    region: SurfaceRegion, arc: Sequence[str], atlas: OrientationAtlas
) -> UnionDisk:
    """Merge the neighbourhoods of consecutive arc points into one disk.

    Each merge must share exactly the two cells on the edge just walked, and
    the merged cells must be bounded by a single simple cycle that avoids
    every arc point. The boundary is oriented along the atlas.

    Raises:
        InputError: If the arc is not a path of the graph.
        NotInteriorEdgeError: If an arc edge is not covered by two cells.
        NoDiskError: If an arc point lies in no cell.
        SurfaceConsistencyError: If a merge or the final boundary is malformed.
    """
    graph = region.graph
    path = graph.path(tuple(arc))
    seq = path.vertices
    union = set(region.cells_containing(seq[0]))
    if not union:
        raise NoDiskError(f"{seq[0]!r} lies in no surface-cell of the region")
    for prev, here in zip(seq, seq[1:], strict=False):
        flank = set(region.cells_on_edge(make_edge(prev, here)))
        if len(flank) != 2:
            raise NotInteriorEdgeError(
                f"edge {prev}-{here} lies in {len(flank)} cells, not two"
            )
        cells = set(region.cells_containing(here))
        shared = union & cells
        if shared != flank:
            raise SurfaceConsistencyError(
                f"neighbourhood merge at {here} shares {len(shared)} cells; expected "
                f"exactly the two cells on edge {prev}-{here}"
            )
        union |= cells

    counts: Counter[Edge] = Counter()
    for i in union:
        counts.update(region.complex.cells[i].edges())
    rim = [e for e, n in counts.items() if n == 1]
    adjacency: dict[str, list[str]] = {}
    for e in rim:
        a, b = tuple(e)
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    if not adjacency or any(len(n) != 2 for n in adjacency.values()):
        raise SurfaceConsistencyError(
            f"merged neighbourhood of {list(seq)} is not bounded by a simple cycle"
        )
    if adjacency.keys() & set(seq):
        raise SurfaceConsistencyError(
            f"merged neighbourhood of {list(seq)} has an arc point on its rim"
        )

    start = min(adjacency, key=graph.order)
    ring = [start, min(adjacency[start], key=graph.order)]
    while True:
        a, b = adjacency[ring[-1]]
        step = a if a != ring[-2] else b
        if step == start:
            break
        ring.append(step)
    if len(ring) != len(adjacency):
        raise SurfaceConsistencyError(
            f"merged neighbourhood of {list(seq)} has a disconnected rim"
        )
    first_edge = make_edge(ring[0], ring[1])
    owner = next(
        i for i in sorted(union) if first_edge in region.complex.cells[i].edge_set()
    )
    if not atlas.traverses(owner, ring[0], ring[1]):
        ring = [ring[0], *reversed(ring[1:])]
    cells = tuple(sorted(union))
    return UnionDisk(seq, cells, VertexCycle.from_sequence(ring, graph.order))
