"""Drawing data model: vertex points, one optional bend per edge, a
declared slope set, and a JSON round trip.

Coordinates are exact rationals and serialise as "n/d" strings, so a
saved drawing reloads bit for bit.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geometry import angle_key, canon_slope, vsub
from .graph import Graph

FORMAT = "slopebend-drawing"


def _frac(text) -> Fraction:
    return Fraction(text)


def _s(x) -> str:
    return str(Fraction(x))


class Drawing:
    """A straight-line or one-bend drawing of a graph.

    points maps vertex -> point; bends maps each edge (as an unordered
    pair) to its bend point or None for a straight edge.  quads
    optionally records, per edge, a quadrilateral attached to that edge
    by the producer (corner order as produced).
    """

    def __init__(self, graph: Graph, points: dict, bends: dict, slopes, quads=None,
                 mode: str = "outerplanar"):
        self.graph = graph
        self.points = dict(points)
        self.bends = {frozenset(e): p for e, p in bends.items()}
        self.slopes = sorted({canon_slope(s) for s in slopes}, key=angle_key)
        self.quads = list(quads) if quads else []
        self.mode = mode
        for v in graph.vertices():
            if v not in self.points:
                raise ValueError(f"no point for vertex {v!r}")
        for u, v in graph.edges():
            if frozenset((u, v)) not in self.bends:
                raise ValueError(f"no bend entry for edge {(u, v)!r}")

    def bend(self, u, v):
        return self.bends[frozenset((u, v))]

    def polyline(self, u, v) -> list:
        b = self.bend(u, v)
        if b is None:
            return [self.points[u], self.points[v]]
        return [self.points[u], b, self.points[v]]

    def segments(self) -> list:
        """All drawn segments as (a, b, (u, v)) in edge order."""
        out = []
        for u, v in self.graph.edges():
            line = self.polyline(u, v)
            for a, b in zip(line, line[1:]):
                out.append((a, b, (u, v)))
        return out

    def used_slopes(self) -> list[tuple[int, int]]:
        seen = {}
        for a, b, _ in self.segments():
            seen[canon_slope(vsub(b, a))] = True
        return sorted(seen, key=angle_key)

    def bend_count(self) -> int:
        return sum(1 for p in self.bends.values() if p is not None)

    def bounding_box(self):
        pts = list(self.points.values()) + [p for p in self.bends.values() if p]
        for _, corners in self.quads:
            pts.extend(corners)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return (min(xs), min(ys), max(xs), max(ys))

    def transformed(self, fn) -> "Drawing":
        """New drawing with every coordinate mapped through fn."""
        return Drawing(
            self.graph,
            {v: fn(p) for v, p in self.points.items()},
            {e: (fn(p) if p is not None else None) for e, p in self.bends.items()},
            self.slopes,
            [(e, tuple(fn(c) for c in corners)) for e, corners in self.quads],
            self.mode,
        )

    def affine(self, m00, m01, m10, m11, tx=0, ty=0) -> "Drawing":
        def fn(p):
            return (m00 * p[0] + m01 * p[1] + tx, m10 * p[0] + m11 * p[1] + ty)

        return self.transformed(fn)

    def to_json_obj(self) -> dict:
        obj = {
            "format": FORMAT,
            "version": 1,
            "mode": self.mode,
            "slopes": [f"{dx}:{dy}" for dx, dy in self.slopes],
            "vertices": [[v, _s(p[0]), _s(p[1])] for v, p in self.points.items()],
            "edges": [],
        }
        for u, v in self.graph.edges():
            b = self.bend(u, v)
            obj["edges"].append([u, v, None if b is None else [_s(b[0]), _s(b[1])]])
        if self.quads:
            obj["quads"] = [
                [list(e), [[_s(c[0]), _s(c[1])] for c in corners]]
                for e, corners in self.quads
            ]
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)

    @classmethod
    def from_json_obj(cls, obj) -> "Drawing":
        if obj.get("format") != FORMAT:
            raise ValueError("not a drawing document")
        g = Graph()
        points = {}
        for v, x, y in obj["vertices"]:
            v = _vertex_id(v)
            g.add_vertex(v)
            points[v] = (_frac(x), _frac(y))
        bends = {}
        for u, v, b in obj["edges"]:
            u, v = _vertex_id(u), _vertex_id(v)
            g.add_edge(u, v)
            bends[(u, v)] = None if b is None else (_frac(b[0]), _frac(b[1]))
        slopes = [tuple(map(int, s.split(":"))) for s in obj["slopes"]]
        quads = [
            (tuple(_vertex_id(x) for x in e), tuple((_frac(c[0]), _frac(c[1])) for c in cs))
            for e, cs in obj.get("quads", [])
        ]
        return cls(g, points, bends, slopes, quads, obj.get("mode", "outerplanar"))

    @classmethod
    def loads(cls, text: str) -> "Drawing":
        return cls.from_json_obj(json.loads(text))


def _vertex_id(v):
    # JSON keeps ints and strings apart already; reject anything else
    if not isinstance(v, (int, str)):
        raise ValueError(f"bad vertex id {v!r}")
    return v
