import random

from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    nx_outerplanar_oracle,
    path_graph,
    petersen,
    sparsified_outerplanar,
    triangulated_polygon,
)
from slopebend.graph import Graph
from slopebend.outerplanar import (
    all_faces,
    biconnected_components,
    face_walk,
    is_outerplanar,
    outerplanar_embedding,
    outerplanar_witness,
)


def assert_valid_embedding(g, emb):
    for v in g.vertices():
        assert sorted(emb.rotations[v]) == sorted(g.neighbors(v))
    for ci, comp in enumerate(emb.components):
        sub = g.subgraph(comp)
        if sub.m == 0:
            assert emb.starts[ci] is None
            continue
        rot = {v: emb.rotations[v] for v in comp}
        # Euler: a rotation system is planar iff V - E + F = 2 (connected)
        assert sub.n - sub.m + len(all_faces(rot)) == 2
        walk = emb.outer_walk(ci)
        assert {x for e in walk for x in e} == set(comp)


def test_biconnected_components_bowtie():
    g = Graph(edges=[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    blocks, cuts = biconnected_components(g)
    assert sorted(len(b) for b in blocks) == [3, 3]
    assert cuts == [2]


def test_biconnected_components_bridge_and_isolated():
    g = Graph(vertices=[9], edges=[(0, 1), (1, 2), (2, 0), (2, 3)])
    blocks, cuts = biconnected_components(g)
    assert sorted(len(b) for b in blocks) == [1, 3]
    assert cuts == [2]


def test_small_positives():
    for g in [
        Graph(),
        Graph(vertices=[0]),
        path_graph(2),
        path_graph(6),
        cycle_graph(3),
        cycle_graph(12),
        complete_graph(3),
        Graph(edges=[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        complete_graph(4).copy(),
    ]:
        if g.n == 4 and g.m == 6:
            g.remove_edge(0, 1)  # K4 minus an edge is outerplanar
        emb = outerplanar_embedding(g)
        assert emb is not None
        assert_valid_embedding(g, emb)


def test_small_negatives():
    for g in [
        complete_graph(4),
        complete_graph(5),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        petersen(),
    ]:
        assert not is_outerplanar(g)


def test_wheel_and_grid_negative():
    wheel = Graph(edges=[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
    assert not is_outerplanar(wheel)
    grid = Graph()
    for i in range(3):
        for j in range(3):
            if i < 2:
                grid.add_edge((i, j), (i + 1, j))
            if j < 2:
                grid.add_edge((i, j), (i, j + 1))
    assert not is_outerplanar(grid)


def test_triangulated_polygons_and_subgraphs():
    rng = random.Random(7)
    for n in (3, 4, 5, 8, 13, 30):
        g = triangulated_polygon(n, rng)
        emb = outerplanar_embedding(g)
        assert emb is not None
        assert_valid_embedding(g, emb)
        h = sparsified_outerplanar(n, rng)
        assert is_outerplanar(h)
        emb2 = outerplanar_embedding(h)
        assert_valid_embedding(h, emb2)


def test_face_walks_square_with_chord():
    g = Graph(edges=[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    emb = outerplanar_embedding(g)
    rot = emb.rotations
    faces = all_faces(rot)
    sizes = sorted(len(f) for f in faces)
    assert sizes == [3, 3, 4]
    outer = emb.outer_walk(0)
    assert len(outer) == 4
    assert {x for e in outer for x in e} == {0, 1, 2, 3}
    # chord 0-2 borders the two triangles, not the outer face
    assert (0, 2) not in outer and (2, 0) not in outer


def test_outer_walk_tree_traverses_each_edge_twice():
    g = Graph(edges=[(0, 1), (1, 2), (1, 3), (3, 4)])
    emb = outerplanar_embedding(g)
    walk = emb.outer_walk(0)
    assert len(walk) == 2 * g.m
    assert {frozenset(e) for e in walk} == {frozenset(e) for e in g.edges()}


def test_outer_walk_bowtie_visits_cut_vertex_twice():
    g = Graph(edges=[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    emb = outerplanar_embedding(g)
    walk = emb.outer_walk(0)
    assert len(walk) == 6
    heads = [e[1] for e in walk]
    assert heads.count(2) == 2


def test_witness_k4_and_k23():
    kind, h, branch = outerplanar_witness(complete_graph(4))
    assert kind == "K4"
    assert h.n == 4 and h.m == 6 and len(branch) == 4

    kind, h, branch = outerplanar_witness(complete_bipartite(2, 3))
    assert kind == "K2,3"
    assert h.n == 5 and h.m == 6 and len(branch) == 2

    assert outerplanar_witness(cycle_graph(9)) is None


def test_witness_subdivided_k4():
    # once every K4 edge is subdivided, a smaller theta subgraph (three
    # long paths between two branch vertices) is the minimal witness
    g = Graph()
    k4 = complete_graph(4)
    nxt = 4
    for u, v in k4.edges():
        g.add_edge(u, nxt)
        g.add_edge(nxt, v)
        nxt += 1
    kind, h, branch = outerplanar_witness(g)
    assert kind == "K2,3"
    assert len(branch) == 2
    assert sorted(h.degree(v) for v in h.vertices()).count(3) == 2


def test_witness_is_minimal_and_contained():
    g = petersen()
    g.add_edge(0, 7)
    kind, h, branch = outerplanar_witness(g)
    assert kind in ("K4", "K2,3")
    for u, v in h.edges():
        assert g.has_edge(u, v)
        h2 = h.copy()
        h2.remove_edge(u, v)
        assert is_outerplanar(h2)
    assert not is_outerplanar(h)


def test_witness_in_disconnected_graph():
    g = Graph(edges=[(0, 1), (1, 2), (2, 0)])
    for u, v in complete_bipartite(2, 3).edges():
        g.add_edge(f"b{u}", f"b{v}")
    kind, h, _ = outerplanar_witness(g)
    assert kind == "K2,3"
    assert all(isinstance(u, str) for u in h.vertices())


def test_face_walk_rule_matches_geometry_on_square():
    # rotations of the unit square drawn with y up, listed clockwise
    rot = {0: [3, 1], 1: [0, 2], 2: [1, 3], 3: [2, 0]}
    inner = face_walk(rot, 0, 1)
    assert inner == [(0, 1), (1, 2), (2, 3), (3, 0)]
    outer = face_walk(rot, 1, 0)
    assert outer == [(1, 0), (0, 3), (3, 2), (2, 1)]


edge_st = st.tuples(st.integers(0, 7), st.integers(0, 7)).filter(lambda e: e[0] != e[1])


@settings(max_examples=150, deadline=None)
@given(st.lists(edge_st, max_size=18))
def test_matches_planarity_oracle(pairs):
    g = Graph(edges=pairs)
    assert is_outerplanar(g) == nx_outerplanar_oracle(g)


@settings(max_examples=60, deadline=None)
@given(st.lists(edge_st, max_size=18))
def test_embedding_valid_whenever_outerplanar(pairs):
    g = Graph(edges=pairs)
    emb = outerplanar_embedding(g)
    if emb is not None:
        assert_valid_embedding(g, emb)
