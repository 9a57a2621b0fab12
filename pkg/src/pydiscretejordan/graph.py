"""Simple undirected graphs with deterministic vertex ordering."""

__all__ = ["Graph", "validate_vertex_id"]

import logging
from collections.abc import Iterable, Sequence

import networkx as nx

from .const import AUTO_MAX_LEN_VERTEX_LIMIT, FORBIDDEN_ID_CHARS, MIN_CYCLE_LEN
from .exceptions import InputError
from .models import Edge, VertexCycle, VertexPath, make_edge

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())


def validate_vertex_id(name: str) -> None:
    """Check that a vertex id is non-empty and free of reserved characters.

    Raises:
        InputError: If the id is unusable.
    """
    if not name:
        raise InputError("Vertex id must not be empty")
    bad = sorted(FORBIDDEN_ID_CHARS.intersection(name))
    if bad:
        raise InputError(f"Vertex id {name!r} contains reserved characters {bad}")


class Graph:
    """Immutable simple undirected graph over opaque string vertex ids.

    Vertices keep their declaration order; that position is the order key
    used for every deterministic listing the library produces.
    """

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]],
        *,
        require_connected: bool = True,
    ) -> None:
        """Build and validate the graph.

        Args:
            vertices: Vertex ids in declaration order.
            edges: Unordered vertex pairs.
            require_connected: Reject disconnected graphs. Induced subgraphs
                are built with this switched off.

        Raises:
            InputError: On duplicate vertices, unknown endpoints, self-loops,
                duplicate edges, or a disconnected graph.
        """
        names = tuple(vertices)
        index: dict[str, int] = {}
        for name in names:
            validate_vertex_id(name)
            if name in index:
                raise InputError(f"Duplicate vertex {name!r}")
            index[name] = len(index)

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(names)
        for u, v in edges:
            for end in (u, v):
                if end not in index:
                    raise InputError(
                        f"Edge ({u}, {v}) references unknown vertex {end!r}"
                    )
            if u == v:
                raise InputError(f"Self-loop at {u!r} is not allowed in a simple graph")
            if nx_graph.has_edge(u, v):
                raise InputError(f"Duplicate edge ({u}, {v})")
            nx_graph.add_edge(u, v)

        if require_connected and names and not nx.is_connected(nx_graph):
            raise InputError("Ambient graph must be connected")

        self._names = names
        self._index = index
        self._graph = nx.freeze(nx_graph)
        _LOGGER.debug(
            "Built graph with %d vertices and %d edges",
            len(names),
            nx_graph.number_of_edges(),
        )

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._names == other._names and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash((self._names, self.edge_set))

    def __repr__(self) -> str:
        return f"Graph(vertices={len(self)}, edges={self.number_of_edges})"

    @property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view of the graph."""
        return self._graph

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertices in declaration order."""
        return self._names

    @property
    def number_of_edges(self) -> int:
        """Number of edges."""
        return int(self._graph.number_of_edges())

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges as ordered pairs, sorted by the order keys of their ends."""
        pairs = (self.sort_pair(u, v) for u, v in self._graph.edges())
        return tuple(sorted(pairs, key=lambda p: (self.order(p[0]), self.order(p[1]))))

    @property
    def edge_set(self) -> frozenset[Edge]:
        """Edges as a set of unordered pairs."""
        return frozenset(make_edge(u, v) for u, v in self._graph.edges())

    def order(self, vertex: str) -> int:
        """Return the declaration position of a vertex.

        Raises:
            InputError: If the vertex is unknown.
        """
        try:
            return self._index[vertex]
        except KeyError as err:
            raise InputError(f"Unknown vertex {vertex!r}") from err

    def check_vertices(self, vertices: Iterable[str]) -> None:
        """Raise InputError naming the first unknown vertex, if any."""
        for vertex in vertices:
            self.order(vertex)

    def sort_vertices(self, vertices: Iterable[str]) -> tuple[str, ...]:
        """Return vertices sorted by order key."""
        return tuple(sorted(vertices, key=self.order))

    def sort_pair(self, u: str, v: str) -> tuple[str, str]:
        """Return the pair with the smaller order key first."""
        return (u, v) if self.order(u) <= self.order(v) else (v, u)

    def edge_key(self, edge: Edge) -> tuple[int, int]:
        """Sort key for an unordered edge."""
        u, v = self.sort_pair(*edge)
        return self.order(u), self.order(v)

    def sort_edges(self, edges: Iterable[Edge]) -> tuple[Edge, ...]:
        """Return edges sorted by order keys of their ends."""
        return tuple(sorted(edges, key=self.edge_key))

    def cycle_key(self, cycle: VertexCycle) -> tuple[int, tuple[int, ...]]:
        """Sort key for cycles: shorter first, then canonical order keys."""
        return len(cycle), tuple(self.order(v) for v in cycle.canonical)

    def adjacent(self, u: str, v: str) -> bool:
        """Whether ``u`` and ``v`` are joined by an edge."""
        self.check_vertices((u, v))
        return bool(self._graph.has_edge(u, v))

    def within_one(self, u: str, v: str) -> bool:
        """Whether the graph distance between ``u`` and ``v`` is at most one."""
        return u == v or self.adjacent(u, v)

    def neighbors(self, vertex: str) -> tuple[str, ...]:
        """Neighbours of a vertex, sorted by order key."""
        self.order(vertex)
        return self.sort_vertices(self._graph.neighbors(vertex))

    def induced_subgraph(self, vertices: Iterable[str]) -> "Graph":
        """Return the subgraph induced on a vertex subset.

        The result keeps the declaration order of this graph and may be
        disconnected.

        Raises:
            InputError: If a vertex is unknown.
        """
        keep = set(vertices)
        self.check_vertices(keep)
        names = [v for v in self._names if v in keep]
        sub = self._graph.subgraph(keep)
        return Graph(names, list(sub.edges()), require_connected=False)

    def path(self, vertices: Sequence[str], *, closed: bool = False) -> VertexPath:
        """Create a path after checking that each step is an edge.

        Raises:
            InputError: If a vertex is unknown or consecutive vertices are
                not adjacent.
        """
        path = VertexPath(tuple(vertices), closed)
        self._check_edges(path.vertices, closed)
        return path

    def cycle(self, vertices: Sequence[str]) -> VertexCycle:
        """Create a canonical cycle after checking that each step is an edge.

        Raises:
            InputError: If a vertex is unknown or the sequence is not a cycle.
        """
        seq = tuple(vertices)
        if len(seq) < MIN_CYCLE_LEN:
            raise InputError(f"{list(seq)} is not a cycle: too few vertices")
        self._check_edges(seq, True)
        return VertexCycle.from_sequence(seq, self.order)

    def _check_edges(self, seq: Sequence[str], closed: bool) -> None:
        self.check_vertices(seq)
        pairs = list(zip(seq, seq[1:], strict=False))
        if closed:
            pairs.append((seq[-1], seq[0]))
        for u, v in pairs:
            if not self._graph.has_edge(u, v):
                raise InputError(f"({u}, {v}) is not an edge of the graph")

    def is_minimal_cycle(self, cycle: VertexCycle | Sequence[str]) -> bool:
        """Whether a cycle is chordless in this graph.

        Args:
            cycle: A cycle, or a vertex sequence with closing edge implied.

        Raises:
            InputError: If the sequence is not a cycle of this graph.
        """
        seq = cycle.vertices if isinstance(cycle, VertexCycle) else tuple(cycle)
        if len(self) < MIN_CYCLE_LEN or len(seq) < MIN_CYCLE_LEN:
            return False
        self._check_edges(seq, True)
        if len(set(seq)) != len(seq):
            raise InputError(f"{list(seq)} is not a simple cycle")
        return int(self._graph.subgraph(seq).number_of_edges()) == len(seq)

    def _resolve_max_len(self, max_len: int | None) -> int:
        if max_len is None:
            if len(self) > AUTO_MAX_LEN_VERTEX_LIMIT:
                raise InputError(
                    f"max_len is required for graphs with more than "
                    f"{AUTO_MAX_LEN_VERTEX_LIMIT} vertices"
                )
            return len(self)
        if max_len < MIN_CYCLE_LEN:
            raise InputError(f"max_len must be at least {MIN_CYCLE_LEN}, got {max_len}")
        return max_len

    def _canonical_cycles(self, raw: Iterable[list[str]]) -> tuple[VertexCycle, ...]:
        found = {
            VertexCycle.from_sequence(seq, self.order)
            for seq in raw
            if len(seq) >= MIN_CYCLE_LEN
        }
        return tuple(sorted(found, key=self.cycle_key))

    def minimal_cycles(self, max_len: int | None = None) -> tuple[VertexCycle, ...]:
        """Enumerate every chordless cycle up to a length bound.

        Args:
            max_len: Longest cycle to report. Defaults to the vertex count for
                graphs of at most ``AUTO_MAX_LEN_VERTEX_LIMIT`` vertices.

        Returns:
            Each chordless cycle once, shorter cycles first, then by the order
            keys of the canonical form.

        Raises:
            InputError: If the bound is missing on a large graph or below 3.
        """
        if len(self) < MIN_CYCLE_LEN:
            return ()
        bound = self._resolve_max_len(max_len)
        cycles = self._canonical_cycles(
            nx.chordless_cycles(nx.Graph(self._graph), length_bound=bound)
        )
        _LOGGER.debug("Found %d chordless cycles of length <= %d", len(cycles), bound)
        return cycles

    def simple_cycles(self, max_len: int | None = None) -> tuple[VertexCycle, ...]:
        """Enumerate every simple cycle up to a length bound, chords allowed.

        Ordering and bound handling match :meth:`minimal_cycles`.
        """
        if len(self) < MIN_CYCLE_LEN:
            return ()
        bound = self._resolve_max_len(max_len)
        return self._canonical_cycles(
            nx.simple_cycles(nx.Graph(self._graph), length_bound=bound)
        )

    def cycle_vertices(self) -> frozenset[str]:
        """Vertices that lie on at least one cycle.

        These are the members of biconnected components with three or more
        vertices; the two-vertex components are bridges.
        """
        return frozenset(
            v
            for part in nx.biconnected_components(self._graph)
            if len(part) >= MIN_CYCLE_LEN
            for v in part
        )

    def connected_components(
        self, removed: Iterable[str] = ()
    ) -> tuple[tuple[str, ...], ...]:
        """Connected components after deleting a vertex subset.

        Returns:
            Components as vertex tuples sorted by order key; components are
            listed by their smallest member.

        Raises:
            InputError: If a removed vertex is unknown.
        """
        gone = set(removed)
        self.check_vertices(gone)
        remaining = self._graph.subgraph(v for v in self._names if v not in gone)
        components = [self.sort_vertices(c) for c in nx.connected_components(remaining)]
        return tuple(sorted(components, key=lambda c: self.order(c[0])))
