"""Exact drawing verifier, independent of every producer.

All checks run in integer arithmetic after one common-denominator
scaling of the coordinates; there is no tolerance anywhere.  Planarity
is all-pairs segment classification with a bounding-box prefilter; the
outer face is found by walking the segment arrangement clockwise from
the bottommost node, and nesting of disconnected pieces is detected by
exact even-odd ray casting against outer walks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .drawing import Drawing
from .geometry import (
    CROSS,
    DISJOINT,
    OVERLAP,
    SHARED_ENDPOINT,
    angle_key,
    canon_slope,
    cross,
    dot,
    integer_scale,
    on_segment,
    point_in_polygon,
    polygon_area2,
    segment_relation,
    vsub,
)

MODES = ("outerplanar", "planar", "general")


@dataclass
class VerificationReport:
    passed: bool
    slope_count: int
    slope_census: list
    violations: list = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "pass": self.passed,
            "slope_count": self.slope_count,
            "slope_census": [f"{dx}:{dy}" for dx, dy in self.slope_census],
            "violations": [
                {
                    "kind": kind,
                    "ids": [list(i) if isinstance(i, tuple) else i for i in ids],
                    "point": None if pt is None else [str(Fraction(pt[0])), str(Fraction(pt[1]))],
                }
                for kind, ids, pt in self.violations
            ],
        }


def _geometry(d: Drawing):
    """Deduplicated integer-scaled node table plus segments and owners."""
    pts = []
    index = {}

    def reg(p):
        p = (Fraction(p[0]), Fraction(p[1]))
        if p not in index:
            index[p] = len(pts)
            pts.append(p)
        return index[p]

    vnode = {v: reg(p) for v, p in d.points.items()}
    bnode = {}
    segs = []  # (node a, node b, edge)
    for u, v in d.graph.edges():
        b = d.bend(u, v)
        if b is None:
            segs.append((vnode[u], vnode[v], (u, v)))
        else:
            bnode[(u, v)] = reg(b)
            segs.append((vnode[u], bnode[(u, v)], (u, v)))
            segs.append((bnode[(u, v)], vnode[v], (u, v)))
    scaled, m = integer_scale(pts)
    return scaled, m, vnode, bnode, segs


def verify_drawing(d: Drawing, mode: str = "outerplanar", budget: int | None = None) -> VerificationReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    violations = []
    pts, scale, vnode, bnode, segs = _geometry(d)
    vert_of_node = {}
    for v, ni in vnode.items():
        vert_of_node.setdefault(ni, v)

    # vertex points distinct
    seen = {}
    for v, ni in vnode.items():
        if ni in seen:
            violations.append(("vertex-collision", (seen[ni], v), pts[ni]))
        else:
            seen[ni] = v

    # no zero-length segment (bend on its own endpoint, or coinciding ends)
    for a, b, e in segs:
        if a == b:
            violations.append(("degenerate-segment", (e,), pts[a]))
    segs = [(a, b, e) for a, b, e in segs if a != b]

    # slope census against the declared set
    census = {}
    declared = set(d.slopes)
    for a, b, e in segs:
        s = canon_slope(vsub(pts[b], pts[a]))
        census[s] = True
        if s not in declared:
            violations.append(("undeclared-slope", (e,), pts[a]))
    census_sorted = sorted(census, key=angle_key)
    if budget is not None and len(census_sorted) > budget:
        violations.append(("budget-exceeded", (len(census_sorted), budget), None))

    # no polyline through a foreign vertex or a foreign bend
    protected = [(ni, ("vertex", v)) for v, ni in vnode.items()]
    protected += [(ni, ("bend", e)) for e, ni in bnode.items()]
    for ni, (pkind, owner) in protected:
        p = pts[ni]
        for a, b, e in segs:
            if pkind == "vertex" and owner in e:
                continue
            if pkind == "bend" and owner == e:
                continue
            if on_segment(pts[a], pts[b], p):
                kind = "through-vertex" if pkind == "vertex" else "through-bend"
                violations.append((kind, (owner, e), p))

    if mode in ("planar", "outerplanar"):
        violations.extend(_planarity_violations(pts, segs, vert_of_node))

    if mode == "outerplanar" and not violations:
        comps, walks = _arrangement_walks(pts, vnode, segs)
        on_outer = set()
        for ci in _unnested_components(pts, comps, walks):
            on_outer.update(walks[ci] if walks[ci] else comps[ci])
        for v, ni in vnode.items():
            if ni not in on_outer:
                violations.append(("not-on-outer-face", (v,), pts[ni]))

    def descale(pt):
        if pt is None:
            return None
        return (Fraction(pt[0]) / scale, Fraction(pt[1]) / scale)

    violations = list(dict.fromkeys((kind, ids, descale(pt)) for kind, ids, pt in violations))
    violations.sort(key=lambda x: (x[0], repr(x[1])))
    passed = not violations
    return VerificationReport(passed, len(census_sorted), census_sorted, violations)


def _planarity_violations(pts, segs, vert_of_node):
    out = []
    boxes = []
    for a, b, _ in segs:
        (ax, ay), (bx, by) = pts[a], pts[b]
        boxes.append((min(ax, bx), min(ay, by), max(ax, bx), max(ay, by)))
    for i in range(len(segs)):
        a1, b1, e1 = segs[i]
        x0, y0, x1, y1 = boxes[i]
        for j in range(i + 1, len(segs)):
            a2, b2, e2 = segs[j]
            u0, v0, u1, v1 = boxes[j]
            if u0 > x1 or x0 > u1 or v0 > y1 or y0 > v1:
                continue
            kind, pt = segment_relation(pts[a1], pts[b1], pts[a2], pts[b2])
            if kind == DISJOINT:
                continue
            if kind == SHARED_ENDPOINT:
                if e1 == e2:
                    continue  # the two halves of one bent edge meet at the bend
                ni = ({a1, b1} & {a2, b2}).pop()
                shared = vert_of_node.get(ni)
                if shared is not None and shared in e1 and shared in e2:
                    continue  # edges meeting at their common endpoint
                out.append(("touching-edges", (e1, e2), pt))
            elif kind == CROSS:
                out.append(("crossing-edges", (e1, e2), pt))
            elif kind == OVERLAP:
                out.append(("overlapping-edges", (e1, e2), None))
            else:
                out.append(("touching-edges", (e1, e2), pt))
    return out


def _arrangement_walks(pts, vnode, segs):
    """Connected components of the arrangement, each with its outer walk
    (as a node list; empty for a single-node component)."""
    adj: dict[int, list[int]] = {}
    for v, ni in vnode.items():
        adj.setdefault(ni, [])
    for a, b, _ in segs:
        adj.setdefault(a, [])
        adj.setdefault(b, [])
        if b not in adj[a]:
            adj[a].append(b)
        if a not in adj[b]:
            adj[b].append(a)

    def clockwise(p):
        return sorted(adj[p], key=lambda q: angle_key(vsub(pts[q], pts[p])), reverse=True)

    rot = {p: clockwise(p) for p in adj}
    comps = []
    comp_of = {}
    for start in adj:
        if start in comp_of:
            continue
        comp = [start]
        comp_of[start] = len(comps)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in rot[x]:
                if y not in comp_of:
                    comp_of[y] = len(comps)
                    comp.append(y)
                    stack.append(y)
        comps.append(comp)

    walks = []
    for comp in comps:
        if all(not rot[p] for p in comp):
            walks.append([])
            continue
        base = min(comp, key=lambda p: (pts[p][1], pts[p][0]))
        first = max(rot[base], key=lambda q: angle_key(vsub(pts[q], pts[base])))
        walk_nodes = []
        e = (base, first)
        while True:
            walk_nodes.append(e[0])
            x, w = e
            r = rot[w]
            e = (w, r[(r.index(x) + 1) % len(r)])
            if e == (base, first):
                break
        walks.append(walk_nodes)
    return comps, walks


def _unnested_components(pts, comps, walks):
    """Indices of components not enclosed by any other component."""
    out = []
    for i, comp in enumerate(comps):
        probe = pts[comp[0]]
        nested = False
        for j, walk in enumerate(walks):
            if i == j or not walk:
                continue
            ring = [pts[p] for p in walk]
            if point_in_polygon(probe, ring) != "out":
                nested = True
                break
        if not nested:
            out.append(i)
    return out


def outer_face_vertices(d: Drawing) -> set:
    """Vertices on the unbounded face; requires a crossing-free drawing."""
    pre = verify_drawing(d, mode="planar")
    if not pre.passed:
        raise ValueError("outer face undefined: drawing fails planarity checks")
    pts, _, vnode, bnode, segs = _geometry(d)
    comps, walks = _arrangement_walks(pts, vnode, segs)
    on_outer = set()
    for ci in _unnested_components(pts, comps, walks):
        on_outer.update(walks[ci] if walks[ci] else comps[ci])
    return {v for v, ni in vnode.items() if ni in on_outer}


def _assert_simple_polygon(ring) -> list:
    """Validate and return the ring in counterclockwise orientation."""
    k = len(ring)
    if k < 3:
        raise ValueError("polygon needs at least 3 vertices")
    if len({tuple(p) for p in ring}) != k:
        raise ValueError("repeated polygon vertex")
    area2 = polygon_area2(ring)
    if area2 == 0:
        raise ValueError("degenerate polygon")
    if area2 < 0:
        ring = list(reversed(ring))
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        for j in range(i + 1, k):
            c, d_ = ring[j], ring[(j + 1) % k]
            kind, pt = segment_relation(a, b, c, d_)
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            if adjacent:
                if kind != SHARED_ENDPOINT:
                    raise ValueError("self-intersecting polygon")
            elif kind != DISJOINT:
                raise ValueError("self-intersecting polygon")
    return ring


def _direction_coverage(a, b, d) -> Fraction:
    """Coverage of direction d by the counterclockwise sector from a to b."""
    if cross(a, d) == 0 and dot(a, d) > 0:
        return Fraction(1, 2)
    if cross(b, d) == 0 and dot(b, d) > 0:
        return Fraction(1, 2)
    c = cross(a, b)
    if c > 0:
        inside = cross(a, d) > 0 and cross(d, b) > 0
    elif c < 0:
        inside = not (cross(b, d) >= 0 and cross(d, a) >= 0)
    else:
        # a and b point in opposite directions; the sector is a half-plane
        inside = cross(a, d) > 0
    return Fraction(1) if inside else Fraction(0)


def polygon_slope_coverage(ring, slope) -> Fraction:
    """Total coverage of a slope's two directions over a simple polygon's
    interior angles: 1 per strictly interior direction, 1/2 per boundary
    direction.  Equals k-2 for every simple k-gon."""
    ring = _assert_simple_polygon(ring)
    sdir = canon_slope(slope)
    total = Fraction(0)
    k = len(ring)
    for i in range(k):
        p, q, r = ring[i - 1], ring[i], ring[(i + 1) % k]
        to_next = vsub(r, q)
        to_prev = vsub(p, q)
        if cross(to_next, to_prev) == 0 and dot(to_next, to_prev) > 0:
            raise ValueError("zero angle in polygon")
        for d in (sdir, (-sdir[0], -sdir[1])):
            total += _direction_coverage(to_next, to_prev, d)
    return total


def bipartite_lower_bound(delta: int) -> int:
    """Minimum slope count forced on planar one-bend drawings of the
    hard bipartite family at maximum degree delta."""
    if delta < 3:
        raise ValueError("defined for maximum degree at least 3")
    return -(-2 * (delta - 1) // 3)
