"""Seeded test-instance generators.

Three families: triangulated polygons (with an optional sparsified
variant), bounded-degree random graphs, and the bipartite planar family
that needs many slopes for its maximum degree.  Every generator is a
pure function of its arguments; the same seed always reproduces the
same edge list.
"""

from __future__ import annotations

import random

from .graph import Graph


def gen_maximal_outerplanar(n: int, seed: int) -> Graph:
    """Random triangulated polygon on n >= 3 vertices by ear insertion.

    Starts from a triangle and repeatedly grows a new vertex on a
    random boundary edge, so the result is maximal outerplanar with
    2n - 3 edges."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(seed)
    g = Graph(vertices=range(3), edges=[(0, 1), (1, 2), (2, 0)])
    boundary = [(0, 1), (1, 2), (2, 0)]
    for w in range(3, n):
        i = rng.randrange(len(boundary))
        u, v = boundary.pop(i)
        g.add_edge(u, w)
        g.add_edge(w, v)
        boundary[i:i] = [(u, w), (w, v)]
    return g


def gen_outerplanar(n: int, seed: int, keep: float = 0.7) -> Graph:
    """Sparsified variant: drop each edge of a random triangulated
    polygon independently with probability 1 - keep (vertices stay)."""
    g = gen_maximal_outerplanar(n, seed)
    rng = random.Random((seed << 1) ^ 0x5B5B)
    out = Graph(vertices=g.vertices())
    for u, v in g.edges():
        if rng.random() < keep:
            out.add_edge(u, v)
    return out


def gen_bounded_degree(n: int, delta: int, seed: int) -> Graph:
    """Random simple graph with max degree <= delta.

    Shuffles all vertex pairs and adds edges under the degree cap until
    a seeded target count is reached."""
    if delta < 1 or n < 1:
        raise ValueError("need n >= 1 and a positive degree bound")
    rng = random.Random(seed)
    g = Graph(vertices=range(n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    target = rng.randint(n // 2, max(n // 2, n * delta // 2))
    for u, v in pairs:
        if g.m >= target:
            break
        if g.degree(u) < delta and g.degree(v) < delta:
            g.add_edge(u, v)
    return g


# ------------------------------------------------- the lower-bound family
#
# The cube with two opposite faces each carrying a ring of 8d - 28 new
# vertices; every corner of such a face connects to the d - 3 odd
# positions of its own consecutive (2d - 7)-vertex stretch of the ring.
# Corners end up with degree exactly d, ring vertices with 2 or 3, and
# the graph stays planar and bipartite.

_CUBE_EDGES = [
    (0, 1), (1, 3), (3, 2), (2, 0),  # face z=0
    (4, 5), (5, 7), (7, 6), (6, 4),  # face z=1
    (0, 4), (1, 5), (3, 7), (2, 6),
]
_FACES = [(0, 1, 3, 2), (4, 5, 7, 6)]


def _ring_ids(face_idx: int, m: int):
    base = 8 + face_idx * m
    return list(range(base, base + m))


def gen_lower_bound_graph(delta: int) -> Graph:
    """The degree-delta member of the family; needs delta >= 4 (the
    ring length 8*delta - 28 degenerates below that)."""
    if delta < 4:
        raise ValueError("the family starts at degree 4")
    m = 8 * delta - 28
    stretch = 2 * delta - 7
    g = Graph(vertices=range(8 + 2 * m), edges=_CUBE_EDGES)
    for fi, face in enumerate(_FACES):
        ring = _ring_ids(fi, m)
        for t in range(m):
            g.add_edge(ring[t], ring[(t + 1) % m])
        for ci, corner in enumerate(face):
            for j in range(1, stretch + 1, 2):  # odd positions, 1-indexed
                g.add_edge(corner, ring[ci * stretch + (j - 1)])
    return g


def lower_bound_rotations(delta: int) -> dict:
    """A planar rotation system for gen_lower_bound_graph(delta).

    The z=0 ring is drawn inside the inner square, the z=1 ring outside
    the outer one; corner fans stay inside disjoint quarter wedges, so
    the orders below realise a plane drawing (built counterclockwise,
    mirrored on return to the package's clockwise convention)."""
    if delta < 4:
        raise ValueError("the family starts at degree 4")
    m = 8 * delta - 28
    stretch = 2 * delta - 7
    rot: dict = {}
    vertical = {0: 4, 1: 5, 3: 7, 2: 6, 4: 0, 5: 1, 7: 3, 6: 2}
    for fi, face in enumerate(_FACES):
        ring = _ring_ids(fi, m)
        corner_of = {}
        for ci, corner in enumerate(face):
            chords = [ring[ci * stretch + (j - 1)] for j in range(1, stretch + 1, 2)]
            for t in chords:
                corner_of[t] = corner
            nxt = face[(ci + 1) % 4]
            prv = face[(ci - 1) % 4]
            if fi == 0:
                rot[corner] = [nxt] + chords[::-1] + [prv, vertical[corner]]
            else:
                rot[corner] = [vertical[corner], prv] + chords + [nxt]
        for t in range(m):
            me = ring[t]
            nxt = ring[(t + 1) % m]
            prv = ring[(t - 1) % m]
            c = corner_of.get(me)
            if fi == 0:
                rot[me] = [nxt, prv] + ([c] if c is not None else [])
            else:
                rot[me] = [nxt] + ([c] if c is not None else []) + [prv]
    return {v: lst[::-1] for v, lst in rot.items()}
