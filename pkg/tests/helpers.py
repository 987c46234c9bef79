"""Shared graph builders and independent oracles for the test suite."""

import networkx as nx

from slopebend.graph import Graph


def path_graph(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    return Graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(range(10), outer + inner + spokes)


def triangulated_polygon(n, rng):
    """Random maximal outerplanar graph: a triangulated n-gon."""
    assert n >= 3
    g = cycle_graph(n)

    def tri(vs):
        if len(vs) < 3:
            return
        m = rng.randrange(1, len(vs) - 1)
        g.add_edge(vs[0], vs[m])
        g.add_edge(vs[m], vs[-1])
        tri(vs[: m + 1])
        tri(vs[m:])

    tri(list(range(n)))
    assert g.m == 2 * n - 3
    return g


def sparsified_outerplanar(n, rng, keep=0.7):
    """Random subgraph of a triangulated polygon (may be disconnected)."""
    g = triangulated_polygon(n, rng)
    out = Graph(g.vertices())
    for u, v in g.edges():
        if rng.random() < keep:
            out.add_edge(u, v)
    return out


def nx_graph(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices())
    G.add_edges_from(g.edges())
    return G


def nx_outerplanar_oracle(g):
    """Outerplanarity via an unrelated criterion: G is outerplanar iff
    G plus a vertex adjacent to everything is planar."""
    G = nx_graph(g)
    apex = "__apex__"
    G.add_node(apex)
    for v in g.vertices():
        G.add_edge(apex, v)
    return nx.check_planarity(G)[0]
