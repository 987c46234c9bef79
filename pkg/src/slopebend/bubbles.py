"""Degree augmentation and the recursive decomposition used by the
outerplanar drawing engine.

A vertex of degree strictly between 1 and 2s gets new leaves attached in
its outer-face rotation gap until its degree is exactly 2s, so every
vertex of the working graph has degree 1 or 2s.  The engine then peels
the graph as nested pockets: a pocket hanging at one drawn vertex (fan
pocket), or at two ends of a drawn edge (edge pocket).  This module
provides the purely combinatorial parts: arc extraction at a root, the
boundary path that the children hang from (computed by walking faces),
and the assignment of remaining components to that path's vertices and
edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .outerplanar import Embedding, face_walk


@dataclass
class Augmented:
    """Working graph for the drawing engine.

    graph: original graph plus phantom leaves (vertex ids are ints;
    phantoms get ids above the original ones).  rot: clockwise rotations
    including phantoms.  phantoms: phantom ids in creation order.
    components: per original component, its vertices plus phantoms.
    starts: per component, the leaf the drawing starts from.
    """

    graph: Graph
    rot: dict
    phantoms: list
    components: list
    starts: list

    def is_phantom(self, v) -> bool:
        return v in self._phantom_set

    def __post_init__(self):
        self._phantom_set = set(self.phantoms)


def augment(g: Graph, emb: Embedding, s: int) -> Augmented:
    """Attach phantom leaves so every degree lands in {1, 2s}."""
    if any(not isinstance(v, int) for v in g.vertices()):
        raise ValueError("augment expects integer vertex ids")
    target = 2 * s
    if g.max_degree() > target:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds {target}")
    aug = g.copy()
    rot = {v: list(emb.rotations[v]) for v in g.vertices()}
    next_id = max(g.vertices(), default=-1) + 1
    phantoms: list[int] = []
    components = []
    starts = []

    for ci, comp in enumerate(emb.components):
        first_phantom = None
        if g.subgraph(comp).m == 0:
            (v,) = comp
            p = next_id
            next_id += 1
            aug.add_edge(v, p)
            rot[v] = [p]
            rot[p] = [v]
            phantoms.append(p)
            components.append([v, p])
            starts.append(p)
            continue
        walk = emb.outer_walk(ci)
        first_passage = {}
        for i, (x, v) in enumerate(walk):
            if v not in first_passage:
                y = walk[(i + 1) % len(walk)][1]
                first_passage[v] = (x, y)
        # the walk's own starting tail is entered via the walk's last edge
        tail = walk[0][0]
        if tail not in first_passage:
            first_passage[tail] = (walk[-1][0], walk[0][1])
        comp_all = list(comp)
        for v in comp:
            d = g.degree(v)
            if d == 1 or d == target:
                continue
            x, _ = first_passage[v]
            at = rot[v].index(x) + 1
            fresh = list(range(next_id, next_id + target - d))
            next_id += len(fresh)
            rot[v][at:at] = fresh
            for p in fresh:
                aug.add_edge(v, p)
                rot[p] = [v]
                phantoms.append(p)
                comp_all.append(p)
                if first_phantom is None:
                    first_phantom = p
        components.append(comp_all)
        if first_phantom is not None:
            starts.append(first_phantom)
        else:
            leaves = [v for v in comp if g.degree(v) == 1]
            assert leaves, "a finished component must still have a leaf"
            starts.append(min(leaves))
    return Augmented(aug, rot, phantoms, components, starts)


def arc(rot_v: list, members) -> list:
    """The entries of the cyclic list rot_v lying in members.

    They must form one contiguous cyclic run (a planarity invariant of
    the decomposition); returned in clockwise order."""
    flags = [w in members for w in rot_v]
    k = sum(flags)
    n = len(rot_v)
    if k == 0:
        return []
    if k == n:
        raise ValueError("arc is the whole rotation; no unique break")
    startpos = [i for i in range(n) if flags[i] and not flags[i - 1]]
    if len(startpos) != 1:
        raise ValueError("attachment edges are not contiguous in the rotation")
    i = startpos[0]
    return [rot_v[(i + j) % n] for j in range(k)]


def rotate_after(rot_v: list, x) -> list:
    """rot_v linearised to start right after x, with x removed."""
    i = rot_v.index(x)
    n = len(rot_v)
    return [rot_v[(i + j) % n] for j in range(1, n)]


def _restrict(rot: dict, members) -> dict:
    return {v: [w for w in rot[v] if w in members] for v in members}


def _segment(rotH: dict, tail, apexes, head) -> list:
    """Boundary path from tail to head along the face behind the apex
    corner; apexes is (u,) for a fan corner or (u, v) for the corner
    spanning a drawn edge uv.  Returns the path excluding tail."""
    walk = face_walk(rotH, tail, apexes[0])
    expect = [(tail, apexes[0])]
    for a, b in zip(apexes, apexes[1:]):
        expect.append((a, b))
    expect.append((apexes[-1], head))
    if walk[: len(expect)] != expect:
        raise ValueError("inner face does not match the decomposition")
    rest = walk[len(expect) :]
    heads = [head] + [b for (_, b) in rest]
    assert heads[-1] == tail
    path_back = heads[:-1]  # head ... back towards tail, excluding tail
    if len(set(path_back)) != len(path_back):
        raise ValueError("face boundary is not simple")
    return list(reversed(path_back))


def fan_root_path(rot: dict, u, nbrs: list, members) -> list:
    """Boundary path of the pocket at u, from nbrs[0] to nbrs[-1].

    nbrs are u's edges into the pocket in clockwise order; members is
    the pocket's vertex set (excluding u)."""
    rotH = _restrict(rot, set(members) | {u})
    path = [nbrs[0]]
    for a, b in zip(nbrs, nbrs[1:]):
        path.extend(_segment(rotH, a, (u,), b))
    return path


def edge_root_path(rot: dict, u, v, nbrs_u: list, nbrs_v: list, members) -> list:
    """Boundary path of the pocket hanging under drawn edge uv, from
    nbrs_u[0] to nbrs_v[-1].  The last u-neighbour and first v-neighbour
    coincide exactly when the face at uv is a triangle."""
    rotH = _restrict(rot, set(members) | {u, v})
    path = [nbrs_u[0]]
    for a, b in zip(nbrs_u, nbrs_u[1:]):
        path.extend(_segment(rotH, a, (u,), b))
    mid = _segment(rotH, nbrs_u[-1], (u, v), nbrs_v[0])
    if nbrs_u[-1] == nbrs_v[0]:
        assert mid == [], "triangle face must close the corner"
    else:
        path.extend(mid)
    for a, b in zip(nbrs_v, nbrs_v[1:]):
        path.extend(_segment(rotH, a, (v,), b))
    return path


@dataclass
class Child:
    kind: str  # "v" or "e"
    roots: tuple
    comp: list


def split(graph: Graph, rot: dict, path: list, members) -> list[Child]:
    """Assign the components hanging off the boundary path.

    Every component of members - path touches either one path vertex or
    two consecutive ones; at most one component per path edge.  Children
    are returned in path order, vertex children before the following
    edge child, vertex children at one root ordered by rotation."""
    inner = [w for w in members if w not in set(path)]
    sub = graph.subgraph(inner)
    pos = {w: i for i, w in enumerate(path)}
    at_vertex: dict = {w: [] for w in path}
    at_edge: dict = {}
    for comp in sub.connected_components():
        cset = set(comp)
        attach = []
        for w in path:
            if any(x in cset for x in graph.neighbors(w)):
                attach.append(w)
        if len(attach) == 1:
            at_vertex[attach[0]].append(comp)
        elif len(attach) == 2 and pos[attach[1]] - pos[attach[0]] == 1:
            key = (attach[0], attach[1])
            assert key not in at_edge, "one pocket per path edge"
            at_edge[key] = comp
        else:
            raise ValueError("component attaches to non-consecutive path vertices")
    out: list[Child] = []
    for i, w in enumerate(path):
        kids = at_vertex[w]
        if len(kids) > 1:
            ranks = {}
            for comp in kids:
                cset = set(comp)
                ranks[id(comp)] = min(
                    j for j, x in enumerate(rot[w]) if x in cset
                )
            kids = sorted(kids, key=lambda c: ranks[id(c)])
        for comp in kids:
            out.append(Child("v", (w,), comp))
        if i + 1 < len(path):
            key = (w, path[i + 1])
            if key in at_edge:
                out.append(Child("e", key, at_edge[key]))
    return out
