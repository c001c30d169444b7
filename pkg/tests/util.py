"""Shared helpers for the test suite."""

from rindices import Graph


def relabel(g, perm):
    """Apply a vertex permutation: new id of old vertex v is perm[v]."""
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return Graph(g.n, edges)
