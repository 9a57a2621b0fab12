"""Tests for graph construction, cycles and components."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pydiscretejordan import Graph, generate
from pydiscretejordan.exceptions import InputError
from pydiscretejordan.models import Edge, make_edge

SQUARE = Graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def _naive_chordless_cycles(graph: Graph) -> set[frozenset[Edge]]:
    """Every chordless cycle as an edge set, found by plain depth-first search."""
    found: set[frozenset[Edge]] = set()
    names = graph.vertices

    def extend(path: list[str]) -> None:
        for nxt in graph.neighbors(path[-1]):
            if nxt == path[0] and len(path) >= 3:
                vertices = set(path)
                edges = {make_edge(u, v) for u, v in zip(path, path[1:])}
                edges.add(make_edge(path[-1], path[0]))
                induced = {
                    make_edge(u, v)
                    for u, v in combinations(vertices, 2)
                    if graph.adjacent(u, v)
                }
                if induced == edges:
                    found.add(frozenset(edges))
            elif nxt not in path and names.index(nxt) > names.index(path[0]):
                extend([*path, nxt])

    for start in names:
        extend([start])
    return found


@pytest.mark.parametrize(
    "vertices,edges",
    [
        (["a", "a"], []),
        (["a", "b"], [("a", "c")]),
        (["a", "b"], [("a", "a")]),
        (["a", "b"], [("a", "b"), ("b", "a")]),
        (["a", "b", "c"], [("a", "b")]),
        (["a b"], []),
        ([""], []),
    ],
)
def test_graph_rejects_malformed_input(
    vertices: list[str], edges: list[tuple[str, str]]
) -> None:
    """Test duplicates, unknown ends, loops, bad ids and disconnection."""
    with pytest.raises(InputError):
        Graph(vertices, edges)


def test_declaration_order() -> None:
    """Test vertices keep their declaration order as order key."""
    graph = Graph(["z", "y", "x"], [("x", "y"), ("y", "z")])
    assert graph.vertices == ("z", "y", "x")
    assert graph.order("x") == 2
    assert graph.sort_vertices({"x", "z"}) == ("z", "x")
    assert graph.neighbors("y") == ("z", "x")
    assert graph.edges == (("z", "y"), ("y", "x"))


def test_unknown_vertex() -> None:
    """Test order keys are only defined for known vertices."""
    with pytest.raises(InputError):
        SQUARE.order("q")


def test_induced_subgraph() -> None:
    """Test induced subgraphs keep every edge between kept vertices."""
    sub = SQUARE.induced_subgraph(["a", "b", "c"])
    assert sub.vertices == ("a", "b", "c")
    assert sub.edge_set == {make_edge("a", "b"), make_edge("b", "c")}
    split = SQUARE.induced_subgraph(["a", "c"])
    assert split.number_of_edges == 0


def test_path_and_cycle_construction() -> None:
    """Test paths and cycles must follow edges."""
    assert SQUARE.path(["a", "b", "c"]).vertices == ("a", "b", "c")
    assert SQUARE.cycle(["c", "b", "a", "d"]).canonical == ("a", "b", "c", "d")
    with pytest.raises(InputError):
        SQUARE.path(["a", "c"])
    with pytest.raises(InputError):
        SQUARE.cycle(["a", "b", "c"])


def test_minimal_cycle_check() -> None:
    """Test chords make a cycle non-minimal."""
    graph = Graph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")],
    )
    assert not graph.is_minimal_cycle(["a", "b", "c", "d"])
    assert graph.is_minimal_cycle(["a", "b", "c"])
    assert SQUARE.is_minimal_cycle(["a", "b", "c", "d"])


def test_grid_cycles() -> None:
    """Test the 3x3 grid has four squares and one chordless outer cycle."""
    graph = generate("grid", n=3).build_graph()
    cycles = graph.minimal_cycles()
    assert [len(c) for c in cycles] == [4, 4, 4, 4, 8]
    assert len(graph.simple_cycles(6)) == 8


def test_tree_has_no_cycles() -> None:
    """Test acyclic graphs and tiny graphs yield no cycles."""
    tree = Graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("b", "d")])
    assert tree.minimal_cycles() == ()
    assert Graph(["a", "b"], [("a", "b")]).minimal_cycles() == ()


def test_cycle_vertices() -> None:
    """Test bridges and pendant vertices lie on no cycle."""
    kite = Graph(
        ["a", "b", "c", "t", "u"],
        [("a", "b"), ("b", "c"), ("c", "a"), ("c", "t"), ("t", "u")],
    )
    assert kite.cycle_vertices() == frozenset({"a", "b", "c"})
    assert SQUARE.cycle_vertices() == frozenset(SQUARE.vertices)
    tree = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert tree.cycle_vertices() == frozenset()


def test_large_graph_needs_bound() -> None:
    """Test enumeration on big graphs requires an explicit bound."""
    graph = generate("grid", n=5).build_graph()
    with pytest.raises(InputError):
        graph.minimal_cycles()
    assert len(graph.minimal_cycles(4)) == 16
    with pytest.raises(InputError):
        graph.minimal_cycles(2)


def test_connected_components() -> None:
    """Test removing vertices splits the graph deterministically."""
    assert SQUARE.connected_components(["a", "c"]) == (("b",), ("d",))
    assert SQUARE.connected_components() == (("a", "b", "c", "d"),)
    with pytest.raises(InputError):
        SQUARE.connected_components(["q"])


@st.composite
def small_graphs(draw: st.DrawFn) -> Graph:
    """Random simple graphs on up to seven vertices."""
    n = draw(st.integers(min_value=1, max_value=7))
    names = [f"v{i}" for i in range(n)]
    pairs = list(combinations(names, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(names, chosen, require_connected=False)


@settings(max_examples=200, deadline=None)
@given(graph=small_graphs())
def test_chordless_cycles_match_naive_search(graph: Graph) -> None:
    """Test chordless enumeration against a plain depth-first search."""
    listed = {c.edge_set() for c in graph.minimal_cycles()}
    assert listed == _naive_chordless_cycles(graph)
    assert len(listed) == len(graph.minimal_cycles())


@settings(max_examples=200, deadline=None)
@given(graph=small_graphs(), data=st.data())
def test_components_partition_remaining_vertices(
    graph: Graph, data: st.DataObject
) -> None:
    """Test components cover the remaining vertices exactly once."""
    removed = data.draw(st.sets(st.sampled_from(graph.vertices)))
    parts = graph.connected_components(removed)
    members = [v for part in parts for v in part]
    assert len(members) == len(set(members))
    assert set(members) == set(graph.vertices) - removed
    for part in parts:
        for u in part:
            for v in graph.neighbors(u):
                assert v in removed or v in part
