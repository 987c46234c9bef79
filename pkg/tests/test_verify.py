"""Verifier tests: hand-built drawings with known verdicts, outer face
extraction, the polygon coverage lemma, and the bipartite bound."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from slopebend.drawing import Drawing
from slopebend.graph import Graph
from slopebend.verify import (
    bipartite_lower_bound,
    outer_face_vertices,
    polygon_slope_coverage,
    verify_drawing,
)


def k3_orthogonal(wy=1):
    g = Graph()
    for a, b in [("u", "v"), ("u", "w"), ("v", "w")]:
        g.add_edge(a, b)
    points = {"u": (0, 0), "v": (2, 0), "w": (1, wy)}
    bends = {("u", "v"): None, ("u", "w"): (0, 1), ("v", "w"): (2, 1)}
    return Drawing(g, points, bends, [(1, 0), (0, 1)])


def kinds(report):
    return [k for k, _, _ in report.violations]


def test_k3_orthogonal_passes():
    r = verify_drawing(k3_orthogonal(), mode="outerplanar", budget=2)
    assert r.passed
    assert r.slope_count == 2
    assert r.slope_census == [(1, 0), (0, 1)]
    assert r.violations == []


def test_k3_flipped_apex_fails_with_crossing():
    r = verify_drawing(k3_orthogonal(wy=-1), mode="outerplanar", budget=2)
    assert not r.passed
    assert "crossing-edges" in kinds(r)


def test_k3_budget_one_fails():
    r = verify_drawing(k3_orthogonal(), mode="outerplanar", budget=1)
    assert not r.passed
    assert kinds(r) == ["budget-exceeded"]


def test_empty_drawing_passes():
    r = verify_drawing(Drawing(Graph(), {}, {}, []), mode="outerplanar", budget=0)
    assert r.passed
    assert r.slope_count == 0


def enclosed_fixture():
    # triangle a, b, c with d inside, joined to a and b only
    g = Graph()
    for e in [("a", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")]:
        g.add_edge(*e)
    points = {"a": (0, 0), "b": (4, 0), "c": (2, 4), "d": (2, 1)}
    bends = {frozenset(e): None for e in g.edges()}
    slopes = [(1, 0), (1, 2), (-1, 2), (2, 1), (-2, 1)]
    return Drawing(g, points, bends, slopes)


def test_outer_face_excludes_enclosed_vertex():
    d = enclosed_fixture()
    assert outer_face_vertices(d) == {"a", "b", "c"}
    r = verify_drawing(d, mode="outerplanar")
    assert not r.passed
    assert kinds(r) == ["not-on-outer-face"]
    assert r.violations[0][1] == ("d",)
    assert verify_drawing(d, mode="planar").passed


def test_outer_face_single_edge():
    g = Graph()
    g.add_edge(0, 1)
    d = Drawing(g, {0: (0, 0), 1: (1, 1)}, {(0, 1): None}, [(1, 1)])
    assert outer_face_vertices(d) == {0, 1}
    assert verify_drawing(d, mode="outerplanar", budget=1).passed


def test_outer_face_errors_on_crossing():
    with pytest.raises(ValueError):
        outer_face_vertices(k3_orthogonal(wy=-1))


def test_vertex_collision():
    g = Graph()
    g.add_edge(0, 1)
    g.add_vertex(2)
    d = Drawing(g, {0: (0, 0), 1: (1, 0), 2: (0, 0)}, {(0, 1): None}, [(1, 0)])
    r = verify_drawing(d, mode="general")
    assert ("vertex-collision", (0, 2), (Fraction(0), Fraction(0))) in r.violations


def test_isolated_vertex_on_edge_is_flagged_in_every_mode():
    g = Graph()
    g.add_edge(0, 1)
    g.add_vertex(2)
    d = Drawing(g, {0: (0, 0), 1: (2, 0), 2: (1, 0)}, {(0, 1): None}, [(1, 0)])
    for mode in ("general", "planar", "outerplanar"):
        r = verify_drawing(d, mode=mode)
        assert ("through-vertex", (2, (0, 1)), (Fraction(1), Fraction(0))) in r.violations


def test_coinciding_bends_are_flagged():
    g = Graph()
    g.add_edge("a", "b")
    g.add_edge("c", "d")
    pts = {"a": (0, 0), "b": (2, 0), "c": (0, 2), "d": (2, 2)}
    bends = {("a", "b"): (1, 1), ("c", "d"): (1, 1)}
    d = Drawing(g, pts, bends, [(1, 1), (-1, 1)])
    r = verify_drawing(d, mode="general")
    assert "through-bend" in kinds(r)


def test_degenerate_segment_and_undeclared_slope():
    g = Graph()
    g.add_edge(0, 1)
    d = Drawing(g, {0: (0, 0), 1: (2, 0)}, {(0, 1): (0, 0)}, [(1, 0)])
    assert "degenerate-segment" in kinds(verify_drawing(d, mode="general"))
    d2 = Drawing(g, {0: (0, 0), 1: (2, 1)}, {(0, 1): None}, [(1, 0)])
    r = verify_drawing(d2, mode="general")
    assert ("undeclared-slope", ((0, 1),), (Fraction(0), Fraction(0))) in r.violations


def test_touch_and_overlap_violations():
    g = Graph()
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    # endpoint of one edge in the interior of another
    d = Drawing(
        g,
        {0: (0, 0), 1: (2, 0), 2: (1, 0), 3: (1, 1)},
        {(0, 1): None, (2, 3): None},
        [(1, 0), (0, 1)],
    )
    assert "touching-edges" in kinds(verify_drawing(d, mode="planar"))
    # collinear overlap
    d2 = Drawing(
        g,
        {0: (0, 0), 1: (2, 0), 2: (1, 0), 3: (3, 0)},
        {(0, 1): None, (2, 3): None},
        [(1, 0)],
    )
    assert "overlapping-edges" in kinds(verify_drawing(d2, mode="planar"))
    # general mode has no pairwise planarity checks, but the endpoints
    # of the second edge still sit on the first one
    assert "crossing-edges" not in kinds(verify_drawing(d2, mode="general"))


def test_nested_component_fails_outerplanar_only():
    g = Graph()
    for e in [("a", "b"), ("b", "c"), ("a", "c")]:
        g.add_edge(*e)
    g.add_edge("x", "y")
    pts = {"a": (0, 0), "b": (8, 0), "c": (4, 8), "x": (3, 2), "y": (5, 2)}
    bends = {frozenset(e): None for e in g.edges()}
    d = Drawing(g, pts, bends, [(1, 0), (1, 2), (-1, 2)])
    r = verify_drawing(d, mode="outerplanar")
    assert kinds(r) == ["not-on-outer-face", "not-on-outer-face"]
    assert {v[1][0] for v in r.violations} == {"x", "y"}
    assert verify_drawing(d, mode="planar").passed
    assert outer_face_vertices(d) == {"a", "b", "c"}


def test_side_by_side_components_pass():
    g = Graph()
    g.add_edge("a", "b")
    g.add_edge("x", "y")
    pts = {"a": (0, 0), "b": (1, 0), "x": (5, 0), "y": (6, 0)}
    bends = {frozenset(e): None for e in g.edges()}
    d = Drawing(g, pts, bends, [(1, 0)])
    assert verify_drawing(d, mode="outerplanar", budget=1).passed
    assert outer_face_vertices(d) == {"a", "b", "x", "y"}


def test_report_json_shape():
    r = verify_drawing(k3_orthogonal(), mode="outerplanar", budget=2)
    obj = r.to_json_obj()
    assert obj["pass"] is True
    assert obj["slope_census"] == ["1:0", "0:1"]
    bad = verify_drawing(k3_orthogonal(wy=-1), mode="outerplanar").to_json_obj()
    assert bad["pass"] is False
    assert all(set(v) == {"kind", "ids", "point"} for v in bad["violations"])


@given(
    sx=st.fractions(min_value=Fraction(1, 7), max_value=7),
    tx=st.fractions(min_value=-9, max_value=9),
    ty=st.fractions(min_value=-9, max_value=9),
)
def test_scaling_invariance(sx, tx, ty):
    d = k3_orthogonal().affine(sx, 0, 0, sx, tx, ty)
    r = verify_drawing(d, mode="outerplanar", budget=2)
    assert r.passed and r.slope_census == [(1, 0), (0, 1)]


SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
L_SHAPE = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
FLAT_HEX = [(0, 0), (2, 0), (4, 0), (4, 2), (2, 3), (0, 2)]


def test_coverage_frozen_examples():
    assert polygon_slope_coverage(SQUARE, (1, 0)) == 2
    assert polygon_slope_coverage([(0, 0), (3, 1), (1, 4)], (1, 1)) == 1
    assert polygon_slope_coverage(FLAT_HEX, (1, 0)) == 4
    assert polygon_slope_coverage(L_SHAPE, (1, 0)) == 4


@given(
    ring=st.sampled_from([SQUARE, L_SHAPE, FLAT_HEX, [(0, 0), (5, 1), (2, 7)]]),
    dx=st.integers(-6, 6),
    dy=st.integers(-6, 6),
    rev=st.booleans(),
)
def test_coverage_lemma(ring, dx, dy, rev):
    if dx == 0 and dy == 0:
        dy = 1
    if rev:
        ring = list(reversed(ring))
    assert polygon_slope_coverage(ring, (dx, dy)) == len(ring) - 2


def test_coverage_rejects_bad_polygons():
    with pytest.raises(ValueError):
        polygon_slope_coverage([(0, 0), (2, 2), (2, 0), (0, 2)], (1, 0))  # bowtie
    with pytest.raises(ValueError):
        polygon_slope_coverage([(0, 0), (1, 0)], (1, 0))
    with pytest.raises(ValueError):
        polygon_slope_coverage([(0, 0), (4, 0), (2, 0)], (1, 0))  # flat
    with pytest.raises(ValueError):
        polygon_slope_coverage([(0, 0), (4, 0), (4, 4), (0, 0), (0, 4)], (1, 0))


def test_bipartite_lower_bound():
    assert bipartite_lower_bound(3) == 2
    assert bipartite_lower_bound(5) == 3
    assert bipartite_lower_bound(7) == 4
    assert bipartite_lower_bound(100) == 66
    with pytest.raises(ValueError):
        bipartite_lower_bound(2)
