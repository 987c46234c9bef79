"""Simple undirected graphs on hashable vertex ids.

Adjacency is stored in insertion-ordered dicts rather than sets so that
every iteration order is reproducible run to run; nothing downstream may
depend on hash order.
"""

from __future__ import annotations

from collections import deque


class Graph:
    def __init__(self, vertices=(), edges=()):
        self._adj: dict = {}
        self._edges: dict = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def add_vertex(self, v) -> None:
        if v not in self._adj:
            self._adj[v] = {}

    def add_edge(self, u, v) -> None:
        if u == v:
            raise ValueError(f"loop at {u!r}")
        self.add_vertex(u)
        self.add_vertex(v)
        key = frozenset((u, v))
        if key in self._edges:
            return
        self._edges[key] = (u, v)
        self._adj[u][v] = True
        self._adj[v][u] = True

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self._edges

    def remove_edge(self, u, v) -> None:
        del self._edges[frozenset((u, v))]
        del self._adj[u][v]
        del self._adj[v][u]

    def remove_vertex(self, v) -> None:
        for u in list(self._adj[v]):
            self.remove_edge(u, v)
        del self._adj[v]

    def vertices(self) -> list:
        return list(self._adj)

    def edges(self) -> list[tuple]:
        """Each edge once, endpoints in the order first added."""
        return list(self._edges.values())

    def neighbors(self, v) -> list:
        return list(self._adj[v])

    def degree(self, v) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj.values()), default=0)

    def copy(self) -> "Graph":
        return Graph(self.vertices(), self.edges())

    def subgraph(self, verts) -> "Graph":
        keep = dict.fromkeys(verts)
        g = Graph(keep)
        for u, v in self.edges():
            if u in keep and v in keep:
                g.add_edge(u, v)
        return g

    def connected_components(self) -> list[list]:
        seen = {}
        out = []
        for start in self._adj:
            if start in seen:
                continue
            comp = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1


def relabeled(g: Graph) -> tuple[Graph, dict, list]:
    """Copy of g on vertex ids 0..n-1 (in g's vertex order).

    Returns (copy, old->new map, new->old list).
    """
    old = g.vertices()
    to_new = {v: i for i, v in enumerate(old)}
    h = Graph(range(len(old)), ((to_new[u], to_new[v]) for u, v in g.edges()))
    return h, to_new, old
