"""Minor testing, series-parallel recognition and combinatorial retracts."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graphs import (Graph, GraphError, canonical_form, canonical_graph, contract_edge, delete_edge,
                     delete_vertex, induced_subgraph, is_isomorphic, is_neighborhood_minor)

MAX_MINOR_VERTICES = 8


def _guard(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise GraphError(f"{what} is limited to graphs with at most {limit} vertices (got {g.n})")


def has_minor(g: Graph, h: Graph, max_vertices: int = MAX_MINOR_VERTICES) -> bool:
    """Exhaustive delete/contract search with canonical-form memoization."""
    _guard(g, max_vertices, "has_minor")
    if h.m == 0:
        return g.n >= h.n
    target = canonical_form(h)
    seen: set = set()

    def search(x: Graph) -> bool:
        if x.n < h.n or x.m < h.m:
            return False
        key = canonical_form(x)
        if key in seen:
            return False
        seen.add(key)
        if x.n == h.n and x.m == h.m:
            return key == target
        iso = x.isolated_vertices()
        # isolated vertices are pairwise twins: deleting any one suffices
        if iso and x.n > h.n and search(delete_vertex(x, iso[-1])):
            return True
        for e in x.edges:
            if x.m > h.m and search(delete_edge(x, e)):
                return True
            if x.n > h.n and search(contract_edge(x, e)[0]):
                return True
        return False

    return search(canonical_graph(g))


def is_k4_minor_free(g: Graph) -> bool:
    """Series-parallel test by reduction.

    Within a simple graph, repeatedly drop vertices of degree at most one
    and suppress vertices of degree two (joining their neighbours, with
    parallel edges collapsed).  The graph is K4-minor-free exactly when
    this empties it.
    """
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    queue = deque(v for v in adj if len(adj[v]) <= 2)
    while queue:
        v = queue.popleft()
        if v not in adj or len(adj[v]) > 2:
            continue
        nbrs = adj.pop(v)
        for w in nbrs:
            adj[w].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
        for w in nbrs:
            if len(adj[w]) <= 2:
                queue.append(w)
    return not adj


def neighborhood_minors(g: Graph) -> Iterable[tuple[frozenset[int], int]]:
    """All ``(W, witness)`` with ``G_W`` a neighborhood-minor of ``g``."""
    full = (1 << g.n) - 1
    for mask in range(1, full):
        w = frozenset(v for v in g.vertices if mask >> (v - 1) & 1)
        v = is_neighborhood_minor(g, w)
        if v is not None:
            yield w, v


def retract_moves(g: Graph) -> Iterable[Graph]:
    for e in g.edges:
        yield contract_edge(g, e)[0]
    for w, _ in neighborhood_minors(g):
        yield induced_subgraph(g, w)


def combinatorial_retracts(g: Graph, max_vertices: int = MAX_MINOR_VERTICES) -> dict:
    """Isomorphism classes reachable by contractions and neighborhood-minors.

    Returns a dict canonical_form -> canonical representative graph; ``g``
    itself is included.
    """
    _guard(g, max_vertices, "combinatorial_retracts")
    start = canonical_graph(g)
    found = {canonical_form(start): start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in retract_moves(x):
            key = canonical_form(y)
            if key not in found:
                found[key] = canonical_graph(y)
                queue.append(found[key])
    return found


def has_combinatorial_retract(g: Graph, h: Graph) -> bool:
    return canonical_form(h) in combinatorial_retracts(g)


def is_crf(g: Graph, forbidden: Iterable[Graph]) -> bool:
    """True iff no combinatorial retract of ``g`` is isomorphic to a forbidden graph."""
    classes = combinatorial_retracts(g)
    return all(canonical_form(h) not in classes for h in forbidden)


def contains_isomorphic(graphs: Iterable[Graph], h: Graph) -> bool:
    return any(is_isomorphic(x, h) for x in graphs)
