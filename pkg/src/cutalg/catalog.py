"""Named graphs and the small graph description language.

Grammar (whitespace-insensitive)::

    spec    := explicit | sum
    explicit:= "n=" INT [";" edge ("," edge)*]
    edge    := INT "-" INT
    sum     := union ("#" name "#" union)*      clique/H-sum chain
    union   := name ("+" name)*                 disjoint union
    name    := K<n> | C<n> | P<n> | K<a>_<b> | <r>K<n> | K<n>-e | G<1..10>

An H-sum ``X#H#Y`` identifies vertices ``1..|H|`` of ``Y`` with vertices
``1..|H|`` of ``X``; both must induce ``H`` there.
"""

from __future__ import annotations

import re
from itertools import combinations

from .graphs import Graph, GraphError, clique_sum, disjoint_union, induced_subgraph, is_isomorphic


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)])


def star(m: int) -> Graph:
    return complete_bipartite(1, m)


def empty(n: int) -> Graph:
    return Graph(n, ())


def complete_minus_edge(n: int) -> Graph:
    """``K_n`` without the edge ``{1, n}``."""
    return Graph(n, tuple(e for e in combinations(range(1, n + 1), 2) if e != (1, n)))


def copies(r: int, g: Graph) -> Graph:
    out = g
    for _ in range(r - 1):
        out = disjoint_union(out, g)
    return out


def h_sum(g1: Graph, g2: Graph, h: int) -> Graph:
    """Identify vertices ``1..h`` of ``g2`` with vertices ``1..h`` of ``g1``."""
    return clique_sum(g1, g2, {v: v for v in range(1, h + 1)})


# Figure graphs; drawing positions a=(0,0) b=(1,0) c=(0,1) d=(.5,1.5) e=(1,1)
# are labeled a..e -> 1..5.
_FIGURE = {
    "G1": "1-2,1-3,1-4,2-5",
    "G2": "1-2,1-3,2-3,3-4,4-5",
    "G3": "1-2,1-3,2-3,3-4,2-5",
    "G4": "1-2,1-3,2-3,3-4,3-5",
    "G5": "1-2,1-3,1-5,3-5,2-5,4-5",
    "G6": "1-2,1-3,1-5,3-5,2-5,3-4",
    "G7": "1-2,1-3,1-5,3-5,2-5,4-5,3-4",
    "G8": "1-3,1-5,3-5,2-5,4-5,3-4,2-3",
    "G9": "1-3,1-2,3-5,2-5,2-4,4-5,3-4",
    "G10": "1-3,1-2,3-5,2-5,2-4,4-5,3-4,1-4",
}


def figure_graph(name: str) -> Graph:
    edges = [tuple(int(x) for x in e.split("-")) for e in _FIGURE[name].split(",")]
    return Graph.from_edges(5, edges)


_NAME_PATTERNS = [
    (re.compile(r"^G(\d+)$"), lambda m: figure_graph(f"G{m[1]}")),
    (re.compile(r"^K(\d+)-e$"), lambda m: complete_minus_edge(int(m[1]))),
    (re.compile(r"^K(\d+)_(\d+)$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^(\d+)K(\d+)$"), lambda m: copies(int(m[1]), complete(int(m[2])))),
    (re.compile(r"^K(\d+)$"), lambda m: complete(int(m[1]))),
    (re.compile(r"^C(\d+)$"), lambda m: cycle(int(m[1]))),
    (re.compile(r"^P(\d+)$"), lambda m: path(int(m[1]))),
]


def named_graph(name: str) -> Graph:
    for pat, build in _NAME_PATTERNS:
        m = pat.match(name)
        if m:
            if pat.pattern.startswith("^G") and name not in _FIGURE:
                break
            return build(m)
    raise GraphError(f"unknown graph name {name!r}")


def _parse_explicit(text: str) -> Graph:
    head, _, body = text.partition(";")
    m = re.fullmatch(r"n=(\d+)", head)
    if not m:
        raise GraphError(f"bad vertex count in {text!r}")
    n = int(m[1])
    edges = []
    for tok in filter(None, body.split(",")):
        em = re.fullmatch(r"(\d+)-(\d+)", tok)
        if not em:
            raise GraphError(f"bad edge {tok!r}")
        edges.append((int(em[1]), int(em[2])))
    for i, j in edges:
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edge {i}-{j} outside 1..{n}")
    return Graph.from_edges(n, edges)


def _parse_union(text: str) -> Graph:
    parts = text.split("+")
    g = named_graph(parts[0])
    for p in parts[1:]:
        g = disjoint_union(g, named_graph(p))
    return g


def parse_graph(spec: str) -> Graph:
    text = re.sub(r"\s+", "", spec)
    if not text:
        raise GraphError("empty graph spec")
    if text.startswith("n="):
        return _parse_explicit(text)
    parts = text.split("#")
    if len(parts) % 2 == 0:
        raise GraphError(f"H-sum chain {spec!r} needs the form X#H#Y")
    g = _parse_union(parts[0])
    for k in range(1, len(parts), 2):
        h = named_graph(parts[k])
        other = _parse_union(parts[k + 1])
        hv = range(1, h.n + 1)
        if h.n > min(g.n, other.n):
            raise GraphError(f"{parts[k]} is larger than a summand")
        if not (is_isomorphic(induced_subgraph(g, hv), h) and is_isomorphic(induced_subgraph(other, hv), h)):
            raise GraphError(f"vertices 1..{h.n} do not induce {parts[k]} in both summands")
        g = h_sum(g, other, h.n)
    return g
