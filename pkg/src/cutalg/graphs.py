"""Finite simple graphs, vertex bipartitions and cut sets.

Vertices are always labeled ``1..n`` and edges are stored as sorted pairs
``(i, j)`` with ``i < j`` in lexicographic order.  That order fixes the
coordinate index of every edge in cut vectors, exponent matrices and cut
polytopes downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

MAX_ISO_VERTICES = 10


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge {(i, j)} is not a sorted pair inside 1..{self.n}")
            if (i, j) in seen:
                raise GraphError(f"duplicate edge {(i, j)}")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be sorted lexicographically; use Graph.from_edges")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from arbitrary pairs, dropping repeats."""
        es = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            es.add((min(i, j), max(i, j)))
        return cls(n, tuple(sorted(es)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if not self.adjacency[v]]

    def __str__(self) -> str:
        body = ",".join(f"{i}-{j}" for i, j in self.edges)
        return f"n={self.n}; {body}" if body else f"n={self.n}"


# ---------------------------------------------------------------------------
# partitions and cuts

@dataclass(frozen=True, order=True)
class Partition:
    """Unordered bipartition ``A | A^c`` stored by its side avoiding vertex 1.

    ``mask`` has bit ``v - 1`` set for every ``v`` in ``A``.
    """

    graph_n: int
    mask: int

    def __post_init__(self):
        if self.mask & 1:
            raise GraphError("canonical partitions never contain vertex 1")
        if self.mask >> self.graph_n:
            raise GraphError("partition mentions vertices outside the graph")

    @classmethod
    def from_set(cls, n: int, a: Iterable[int]) -> "Partition":
        """Canonical representative of the partition ``a | a^c``."""
        mask = 0
        for v in a:
            if not 1 <= v <= n:
                raise GraphError(f"vertex {v} outside 1..{n}")
            mask |= 1 << (v - 1)
        if mask & 1:
            mask ^= (1 << n) - 1
        return cls(n, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.graph_n + 1) if self.mask >> (v - 1) & 1)

    def complement(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.graph_n + 1) if not self.mask >> (v - 1) & 1)

    def contains(self, v: int) -> bool:
        return bool(self.mask >> (v - 1) & 1)

    @property
    def label(self) -> str:
        """Digit-string label, ``0`` for the empty side."""
        return "".join(str(v) for v in self.members) or "0"


def enumerate_partitions(g: Graph | int) -> list[Partition]:
    """All ``2**(n-1)`` canonical partitions in ascending bitmask order."""
    n = g if isinstance(g, int) else g.n
    return [Partition(n, k << 1) for k in range(1 << (n - 1))]


def _check_partition(g: Graph, p: Partition) -> None:
    if p.graph_n != g.n:
        raise GraphError(f"partition is for {p.graph_n} vertices, graph has {g.n}")


def cut_set(g: Graph, p: Partition) -> frozenset[tuple[int, int]]:
    _check_partition(g, p)
    return frozenset(e for e in g.edges if p.contains(e[0]) != p.contains(e[1]))


def cut_vector(g: Graph, p: Partition) -> tuple[int, ...]:
    """0/1 characteristic vector of ``cut_set`` in canonical edge order."""
    _check_partition(g, p)
    return tuple(int(p.contains(i) != p.contains(j)) for i, j in g.edges)


def cut_vector_of_set(g: Graph, a: Iterable[int]) -> tuple[int, ...]:
    """Cut vector of an arbitrary (not necessarily canonical) vertex subset."""
    a = set(a)
    return tuple(int((i in a) != (j in a)) for i, j in g.edges)


# ---------------------------------------------------------------------------
# graph operations

def _relabel(n_new: int, edges: Iterable[tuple[int, int]], mapping: dict[int, int]) -> Graph:
    return Graph.from_edges(n_new, ((mapping[i], mapping[j]) for i, j in edges
                                    if mapping[i] != mapping[j]))


def identify_vertices(g: Graph, u: int, v: int) -> tuple[Graph, dict[int, int]]:
    """Merge ``u`` and ``v``; the merged vertex takes the smaller label.

    Returns the simple graph on ``n - 1`` vertices and the relabel map
    old vertex -> new vertex.
    """
    if u == v:
        raise GraphError("cannot identify a vertex with itself")
    for x in (u, v):
        if x not in g.vertices:
            raise GraphError(f"vertex {x} not in graph")
    lo, hi = min(u, v), max(u, v)
    mapping = {}
    for x in g.vertices:
        if x == hi:
            mapping[x] = lo
        elif x > hi:
            mapping[x] = x - 1
        else:
            mapping[x] = x
    return _relabel(g.n - 1, g.edges, mapping), mapping


def contract_edge(g: Graph, e: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    u, v = min(e), max(e)
    if (u, v) not in g.edge_index:
        raise GraphError(f"{(u, v)} is not an edge")
    return identify_vertices(g, u, v)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    key = (min(e), max(e))
    if key not in g.edge_index:
        raise GraphError(f"{key} is not an edge")
    return Graph(g.n, tuple(x for x in g.edges if x != key))


def delete_vertex(g: Graph, v: int) -> Graph:
    if g.n == 1:
        raise GraphError("cannot delete the last vertex")
    return induced_subgraph(g, [x for x in g.vertices if x != v])


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    ws = sorted(set(w))
    if not ws:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if ws[0] < 1 or ws[-1] > g.n:
        raise GraphError("vertex set not contained in the graph")
    mapping = {x: k + 1 for k, x in enumerate(ws)}
    return Graph.from_edges(len(ws), ((mapping[i], mapping[j]) for i, j in g.edges
                                      if i in mapping and j in mapping))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph.from_edges(g1.n + g2.n, list(g1.edges) + [(i + shift, j + shift) for i, j in g2.edges])


def clique_sum(g1: Graph, g2: Graph, embedding: dict[int, int] | Sequence[tuple[int, int]]) -> Graph:
    """Glue ``g2`` onto ``g1`` along identified vertices.

    ``embedding`` maps vertices of ``g2`` to vertices of ``g1``.  The induced
    subgraphs on the identified vertices must coincide under that map.
    Vertices of ``g1`` keep their labels; the remaining vertices of ``g2``
    follow as ``g1.n + 1, ...`` in increasing order.
    """
    emb = dict(embedding)
    if len(set(emb.values())) != len(emb):
        raise GraphError("embedding is not injective")
    for x, y in emb.items():
        if x not in g2.vertices or y not in g1.vertices:
            raise GraphError("embedding mentions unknown vertices")
    for a, b in combinations(sorted(emb), 2):
        if g2.has_edge(a, b) != g1.has_edge(emb[a], emb[b]):
            raise GraphError("embeddings do not induce the same subgraph")
    mapping = dict(emb)
    nxt = g1.n
    for x in g2.vertices:
        if x not in mapping:
            nxt += 1
            mapping[x] = nxt
    return Graph.from_edges(nxt, list(g1.edges) + [(mapping[i], mapping[j]) for i, j in g2.edges])


def duplicate_vertex(g: Graph, v: int) -> Graph:
    if v not in g.vertices:
        raise GraphError(f"vertex {v} not in graph")
    new = g.n + 1
    return Graph.from_edges(new, list(g.edges) + [(u, new) for u in g.neighbors(v)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply ``v -> perm[v - 1]``; ``perm`` is a permutation of ``1..n``."""
    if sorted(perm) != list(g.vertices):
        raise GraphError("not a permutation of the vertices")
    return Graph.from_edges(g.n, ((perm[i - 1], perm[j - 1]) for i, j in g.edges))


def is_neighborhood_minor(g: Graph, w: Iterable[int]) -> int | None:
    """Witness ``v`` in ``W`` with ``W & N_G(W') <= N_H[v]``, or None.

    ``H`` is the induced subgraph on ``W`` and ``W'`` its complement.
    """
    ws = set(w)
    if not ws or ws >= set(g.vertices):
        raise GraphError("W must be a nonempty proper vertex subset")
    if not ws <= set(g.vertices):
        raise GraphError("W not contained in the graph")
    rest = set(g.vertices) - ws
    boundary = set()
    for x in rest:
        boundary |= g.neighbors(x)
    boundary &= ws
    for v in sorted(ws):
        if boundary <= (g.closed_neighbors(v) & ws):
            return v
    return None


# ---------------------------------------------------------------------------
# canonical forms

def _refine(g: Graph, colors: dict[int, int]) -> dict[int, int]:
    while True:
        sigs = {v: (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v)))) for v in g.vertices}
        ranks = {s: k for k, s in enumerate(sorted(set(sigs.values())))}
        new = {v: ranks[sigs[v]] for v in g.vertices}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = new


def _all_twins(g: Graph, cell: list[int]) -> bool:
    first = cell[0]
    for x in cell[1:]:
        if g.neighbors(first) - {x} != g.neighbors(x) - {first}:
            return False
    return True


def _canon_search(g: Graph, colors: dict[int, int]):
    cells: dict[int, list[int]] = {}
    for v, c in colors.items():
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        return tuple(sorted((min(colors[i], colors[j]) + 1, max(colors[i], colors[j]) + 1)
                            for i, j in g.edges))
    choices = [min(target)] if _all_twins(g, target) else sorted(target)
    best = None
    for v in choices:
        shifted = {x: 2 * c + (0 if x == v or c != colors[v] else 1) for x, c in colors.items()}
        cert = _canon_search(g, _refine(g, shifted))
        if best is None or cert < best:
            best = cert
    return best


@lru_cache(maxsize=200_000)
def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Isomorphism-invariant certificate ``(n, sorted edge list)``.

    Individualization-refinement over color classes; exact but exponential
    in the worst case, so guarded at ``MAX_ISO_VERTICES``.
    """
    if g.n > MAX_ISO_VERTICES:
        raise GraphError(f"canonical_form limited to {MAX_ISO_VERTICES} vertices")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n, tuple(combinations(range(1, g.n + 1), 2))
    colors = _refine(g, {v: 0 for v in g.vertices})
    return g.n, _canon_search(g, colors)


def canonical_graph(g: Graph) -> Graph:
    n, edges = canonical_form(g)
    return Graph(n, edges)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degree(v) for v in g1.vertices) != sorted(g2.degree(v) for v in g2.vertices):
        return False
    return canonical_form(g1) == canonical_form(g2)
