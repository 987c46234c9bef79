"""Outerplanar recognition, combinatorial embedding, and certificates.

Recognition runs one block at a time: repeatedly eliminate a degree-2
vertex (recording it and shortcutting its neighbours), then rebuild the
block's unique outer cycle by reinserting in reverse.  The result is
validated directly, so acceptance never rests on the search itself:
every consecutive cycle pair must be a real edge and the chords must be
pairwise non-crossing.  A graph that fails gets a witness subgraph that
is a subdivision of K4 or K2,3.

Rotations list neighbours in clockwise order.  The face to the left of
a directed edge (u, v) is walked by the rule next(u, v) = (v, successor
of u in the rotation at v); inner faces come out counterclockwise and
the outer face clockwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph


def biconnected_components(g: Graph):
    """Blocks (edge lists) and cut vertices, in a reproducible order."""
    index: dict = {}
    low: dict = {}
    counter = 0
    estack: list[tuple] = []
    blocks: list[list[tuple]] = []
    cuts: dict = {}

    for root in g.vertices():
        if root in index or g.degree(root) == 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(None, root, 0)]
        while stack:
            parent, v, ptr = stack[-1]
            nbrs = g.neighbors(v)
            if ptr < len(nbrs):
                stack[-1] = (parent, v, ptr + 1)
                w = nbrs[ptr]
                if w == parent:
                    continue
                if w in index:
                    if index[w] < index[v]:
                        estack.append((v, w))
                        if index[w] < low[v]:
                            low[v] = index[w]
                else:
                    estack.append((v, w))
                    index[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    stack.append((v, w, 0))
            else:
                stack.pop()
                if stack:
                    _, p, _ = stack[-1]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= index[p]:
                        comp = []
                        while True:
                            e = estack.pop()
                            comp.append(e)
                            if e == (p, v):
                                break
                        blocks.append(comp)
                        if p != root:
                            cuts[p] = True
        if root_children > 1:
            cuts[root] = True
    return blocks, list(cuts)


def _block_cycle_and_chords(b: Graph):
    """Outer cycle (counterclockwise by convention) and chord position
    pairs of a biconnected block, or None if the block is not
    outerplanar.  Soundness comes from the validation at the end."""
    n = b.n
    if b.m > 2 * n - 3:
        return None
    g = b.copy()
    records = []
    queue = deque(v for v in g.vertices() if g.degree(v) == 2)
    while g.n > 3:
        while queue and (queue[0] not in g or g.degree(queue[0]) != 2):
            queue.popleft()
        if not queue:
            return None
        v = queue.popleft()
        u, w = g.neighbors(v)
        records.append((v, u, w))
        g.remove_vertex(v)
        if g.has_edge(u, w):
            for x in (u, w):
                if g.degree(x) == 2:
                    queue.append(x)
        else:
            g.add_edge(u, w)
    if g.m != 3:
        return None
    cycle = g.vertices()

    for v, u, w in reversed(records):
        k = len(cycle)
        iu = cycle.index(u)
        iw = cycle.index(w)
        if (iu + 1) % k == iw:
            cycle.insert(iw, v)
        elif (iw + 1) % k == iu:
            cycle.insert(iu, v)
        else:
            return None

    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    for i in range(k):
        if not b.has_edge(cycle[i], cycle[(i + 1) % k]):
            return None
    chords = []
    for u, v in b.edges():
        i, j = sorted((pos[u], pos[v]))
        if j - i != 1 and (i, j) != (0, k - 1):
            chords.append((i, j))
    for a in range(len(chords)):
        i1, j1 = chords[a]
        for c in range(a + 1, len(chords)):
            i2, j2 = chords[c]
            if i1 < i2 < j1 < j2 or i2 < i1 < j2 < j1:
                return None
    return cycle, chords


@dataclass
class Embedding:
    """Clockwise rotation system of an outerplanar graph.

    components lists the vertex sets; starts holds, per component, a
    directed edge whose left face is the outer face (None when the
    component is a single vertex).
    """

    rotations: dict
    components: list[list]
    starts: list

    def outer_walk(self, ci: int) -> list[tuple]:
        """Closed outer-face walk of component ci as directed edges."""
        if self.starts[ci] is None:
            return []
        return face_walk(self.rotations, *self.starts[ci])


def outerplanar_embedding(g: Graph) -> Embedding | None:
    """Rotation system witnessing outerplanarity, or None."""
    rot = {v: [] for v in g.vertices()}
    comps = g.connected_components()
    starts = []
    for comp in comps:
        sub = g.subgraph(comp)
        start = None
        if sub.m > 0:
            blocks, _ = biconnected_components(sub)
            for bedges in blocks:
                bg = Graph(edges=bedges)
                if bg.n == 2:
                    u, v = bedges[0]
                    rot[u].append(v)
                    rot[v].append(u)
                    if start is None:
                        start = (u, v)
                    continue
                res = _block_cycle_and_chords(bg)
                if res is None:
                    return None
                cycle, _ = res
                k = len(cycle)
                pos = {v: i for i, v in enumerate(cycle)}
                for v in cycle:
                    rot[v].extend(
                        sorted(bg.neighbors(v), key=lambda w: -((pos[w] - pos[v]) % k))
                    )
                if start is None:
                    start = (cycle[1], cycle[0])
        starts.append(start)
    return Embedding(rot, comps, starts)


def is_outerplanar(g: Graph) -> bool:
    return outerplanar_embedding(g) is not None


def outerplanar_witness(g: Graph):
    """None if outerplanar, else (kind, subgraph, branch_vertices) where
    the subgraph is an edge-minimal non-outerplanar subgraph of g: a
    subdivision of K4 (kind "K4") or of K2,3 (kind "K2,3")."""
    if is_outerplanar(g):
        return None
    h = None
    for comp in g.connected_components():
        sub = g.subgraph(comp)
        if not is_outerplanar(sub):
            h = sub
            break
    assert h is not None
    for u, v in h.edges():
        h.remove_edge(u, v)
        if is_outerplanar(h):
            h.add_edge(u, v)
    for v in h.vertices():
        if h.degree(v) == 0:
            h.remove_vertex(v)
    degs = [h.degree(v) for v in h.vertices()]
    assert all(d in (2, 3) for d in degs)
    branch = [v for v in h.vertices() if h.degree(v) == 3]
    kind = "K4" if len(branch) == 4 else "K2,3"
    assert len(branch) in (2, 4)
    return kind, h, branch


def face_walk(rot: dict, u, v) -> list[tuple]:
    """Directed edges of the face lying to the left of (u, v)."""
    walk = []
    e = (u, v)
    while True:
        walk.append(e)
        x, w = e
        r = rot[w]
        e = (w, r[(r.index(x) + 1) % len(r)])
        if e == (u, v):
            return walk


def all_faces(rot: dict) -> list[list[tuple]]:
    """Every face of the embedded (multi-component) graph, each walked once."""
    seen = set()
    faces = []
    for v in rot:
        for w in rot[v]:
            if (v, w) not in seen:
                f = face_walk(rot, v, w)
                seen.update(f)
                faces.append(f)
    return faces
