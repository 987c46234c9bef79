import pytest
from hypothesis import given
from hypothesis import strategies as st

from slopebend.graph import Graph, relabeled


def test_basic_construction():
    g = Graph(edges=[(0, 1), (1, 2), (0, 1)])
    assert g.n == 3 and g.m == 2
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.degree(1) == 2
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.max_degree() == 2


def test_loops_rejected():
    g = Graph()
    with pytest.raises(ValueError):
        g.add_edge(3, 3)


def test_removal():
    g = Graph(edges=[(0, 1), (1, 2), (2, 0)])
    g.remove_edge(1, 2)
    assert g.m == 2 and g.degree(1) == 1
    g.remove_vertex(0)
    assert g.vertices() == [1, 2]
    assert g.m == 0


def test_isolated_vertices_and_components():
    g = Graph(vertices=[5], edges=[(0, 1), (2, 3)])
    assert g.connected_components() == [[5], [0, 1], [2, 3]]
    assert not g.is_connected()
    assert Graph(edges=[(0, 1), (1, 2)]).is_connected()
    assert Graph().is_connected()


def test_subgraph_and_copy():
    g = Graph(edges=[(0, 1), (1, 2), (2, 0), (2, 3)])
    h = g.subgraph([0, 1, 2])
    assert h.n == 3 and h.m == 3
    c = g.copy()
    c.remove_edge(0, 1)
    assert g.has_edge(0, 1)


def test_relabeled_round_trip():
    g = Graph(edges=[("b", "a"), ("a", "c")])
    h, to_new, to_old = relabeled(g)
    assert h.vertices() == [0, 1, 2]
    assert to_old[to_new["c"]] == "c"
    assert h.m == 2
    assert h.has_edge(to_new["b"], to_new["a"])


@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9))))
def test_degree_sum_is_twice_edges(pairs):
    g = Graph()
    for u, v in pairs:
        if u != v:
            g.add_edge(u, v)
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.m
    assert len({frozenset(e) for e in g.edges()}) == g.m
