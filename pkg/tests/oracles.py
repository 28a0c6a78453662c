"""Independent reference computations used to freeze expected values.

Nothing here calls the Groebner, Betti or polytope machinery of the package:
the Hilbert function of a cut algebra is counted directly from sums of cut
vectors, isomorphism goes through networkx, and polynomial arithmetic
through sympy.
"""

from __future__ import annotations

import itertools
from math import comb

import networkx as nx


def cut_vectors(n, edges):
    """All cut vectors, one per unordered bipartition, listed by the side avoiding 1."""
    out = []
    for bits in range(1 << (n - 1)):
        side = {v + 2 for v in range(n - 1) if bits >> v & 1}
        out.append(tuple(int((i in side) != (j in side)) for i, j in edges))
    return out


def hilbert_function(n, edges, k_max):
    """``dim K[G]_k`` for ``k <= k_max``: distinct sums of ``k`` cut vectors."""
    vs = cut_vectors(n, edges)
    layer = {tuple([0] * len(edges))}
    values = [1]
    for _ in range(k_max):
        layer = {tuple(a + b for a, b in zip(x, v)) for x in layer for v in vs}
        values.append(len(layer))
    return values


def h_vector(n, edges, k_max):
    """Numerator of the Hilbert series, truncated at ``k_max``."""
    d = len(edges) + 1
    hf = hilbert_function(n, edges, k_max)
    h = [sum((-1) ** i * comb(d, i) * hf[k - i] for i in range(min(d, k) + 1)) for k in range(k_max + 1)]
    while h and h[-1] == 0:
        h.pop()
    return h


def to_nx(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(edges)
    return g


def isomorphic(n1, e1, n2, e2):
    return nx.is_isomorphic(to_nx(n1, e1), to_nx(n2, e2))


def iso_class_count(n):
    """Non-isomorphic graphs on ``n`` vertices with at least one edge, by brute force."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    reps = []
    for mask in range(1, 1 << len(pairs)):
        es = [p for k, p in enumerate(pairs) if mask >> k & 1]
        g = to_nx(n, es)
        if not any(len(es) == h.number_of_edges() and nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return len(reps)


def has_k4_minor_bruteforce(n, edges):
    """Contract/delete search on networkx graphs (no memoization by canonical form)."""
    g = to_nx(n, edges)
    seen = set()

    def key(x):
        return nx.weisfeiler_lehman_graph_hash(x) + str(sorted(x.edges()))

    def rec(x):
        if x.number_of_nodes() < 4 or x.number_of_edges() < 6:
            return False
        if x.number_of_nodes() == 4 and x.number_of_edges() == 6:
            return True
        k = key(x)
        if k in seen:
            return False
        seen.add(k)
        for u, v in list(x.edges()):
            y = x.copy()
            y.remove_edge(u, v)
            if rec(y):
                return True
            z = nx.contracted_nodes(x, u, v, self_loops=False)
            z = nx.Graph(z)
            if rec(z):
                return True
        for v in list(x.nodes()):
            if x.degree(v) == 0:
                y = x.copy()
                y.remove_node(v)
                return rec(y)
        return False

    return rec(g)


def facet_count_scipy(points):
    """Facets of a full-dimensional hull: distinct rounded Qhull hyperplanes."""
    import numpy as np
    from scipy.spatial import ConvexHull

    hull = ConvexHull(np.asarray(points, dtype=float))
    return len({tuple(np.round(eq, 6)) for eq in hull.equations})
