"""Exact polyhedral computations for cut polytopes.

Everything is done with integers and ``fractions.Fraction``; no floating
point enters a face or incidence decision.  Facets are found with the double
description method on the cone of valid inequalities, and faces are
intersections of facet vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .graphs import Graph, GraphError, contract_edge, cut_vector, enumerate_partitions

MAX_DD_DIM = 10
MAX_DD_VERTICES = 128


class PolytopeError(ValueError):
    pass


class PolytopeSizeError(PolytopeError):
    """Input exceeds the dimension or vertex guard."""


@dataclass(frozen=True)
class VPolytope:
    dim_ambient: int
    vertices: tuple[tuple, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PolytopeError("vertices must be distinct")
        if any(len(v) != self.dim_ambient for v in self.vertices):
            raise PolytopeError("vertex of the wrong length")

    def __len__(self):
        return len(self.vertices)

    def to_json(self, h: "HPolytope | None" = None) -> dict:
        out = {"dim": dimension(self),
               "vertices": [[_rat(x) for x in v] for v in self.vertices]}
        if h is not None:
            out["facets"] = [[list(a), b] for a, b in h.inequalities]
        return out


@dataclass(frozen=True)
class HPolytope:
    """Inequalities ``a . x <= b`` with coprime integer entries."""

    dim_ambient: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]

    def satisfied(self, x) -> bool:
        return all(sum(ai * xi for ai, xi in zip(a, x)) <= b for a, b in self.inequalities)

    def tight(self, x) -> frozenset[int]:
        return frozenset(k for k, (a, b) in enumerate(self.inequalities)
                         if sum(ai * xi for ai, xi in zip(a, x)) == b)


def _rat(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# exact rank


def _rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank = 0
    cols = len(m[0])
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _affine_rank(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    base = points[0]
    return _rank([[Fraction(x) - Fraction(y) for x, y in zip(p, base)] for p in points[1:]])


def _inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def _primitive(v: Sequence) -> tuple[int, ...]:
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


# ---------------------------------------------------------------------------
# double description


def _extreme_rays(constraints: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : c . y >= 0 for c in constraints}``.

    Constraints are inserted in the given order; new rays come from pairs of
    adjacent rays on opposite sides, adjacency being decided combinatorially.
    """
    # initial simplicial cone from the first dim independent constraints
    chosen = []
    for k, c in enumerate(constraints):
        if _rank([constraints[i] for i in chosen] + [c]) > len(chosen):
            chosen.append(k)
        if len(chosen) == dim:
            break
    if len(chosen) < dim:
        raise PolytopeError("cone is not pointed (constraints do not span)")
    inv = _inverse([list(constraints[i]) for i in chosen])
    rays = [_primitive([inv[r][col] for r in range(dim)]) for col in range(dim)]
    processed = list(chosen)

    def zero_set(r):
        return frozenset(i for i in processed if sum(a * b for a, b in zip(constraints[i], r)) == 0)

    zeros = [zero_set(r) for r in rays]
    for k in range(len(constraints)):
        if k in chosen:
            continue
        c = constraints[k]
        vals = [sum(a * b for a, b in zip(c, r)) for r in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in plus + zero]
        new_zeros = [zeros[i] for i in plus] + [zeros[i] | {k} for i in zero]
        for i in plus:
            for j in minus:
                common = zeros[i] & zeros[j]
                if len(common) < dim - 2:
                    continue
                if any(t != i and t != j and common <= zeros[t] for t in range(len(rays))):
                    continue
                r = tuple(vals[i] * b - vals[j] * a for a, b in zip(rays[i], rays[j]))
                new_rays.append(_primitive(r))
                new_zeros.append(common | {k})
        rays, zeros = new_rays, new_zeros
        processed.append(k)
    return rays


def double_description(p: VPolytope, max_dim: int = MAX_DD_DIM, max_vertices: int = MAX_DD_VERTICES) -> HPolytope:
    """Irredundant facet description of a full-dimensional polytope."""
    d = p.dim_ambient
    if d > max_dim or len(p) > max_vertices:
        raise PolytopeSizeError(f"double description limited to dim <= {max_dim} and <= {max_vertices} vertices")
    if dimension(p) != d:
        raise PolytopeError("double description needs a full-dimensional polytope")
    verts = sorted(p.vertices)
    cons = [_primitive((1,) + tuple(v)) for v in verts]
    rays = _extreme_rays(cons, d + 1)
    ineqs = []
    for y in rays:
        a = tuple(-x for x in y[1:])
        ineqs.append((a, y[0]))
    return HPolytope(d, tuple(sorted(ineqs)))


def h_to_v(h: HPolytope) -> VPolytope:
    """Vertices of a bounded full-dimensional H-polytope."""
    d = h.dim_ambient
    cons = [(b,) + tuple(-x for x in a) for a, b in h.inequalities]
    cons.append((1,) + (0,) * d)
    verts = []
    for r in _extreme_rays(cons, d + 1):
        if r[0] == 0:
            raise PolytopeError("polyhedron is unbounded")
        verts.append(tuple(Fraction(x, r[0]) for x in r[1:]))
    verts = [tuple(int(x) if x.denominator == 1 else x for x in v) for v in verts]
    return VPolytope(d, tuple(sorted(set(verts))))


def vertex_reduce(points: Sequence[Sequence], h: HPolytope) -> list[tuple]:
    """Points at which the tight facet normals span the ambient space."""
    out = []
    for x in points:
        t = h.tight(x)
        if _rank([h.inequalities[k][0] for k in t]) == h.dim_ambient:
            out.append(tuple(x))
    return out


# ---------------------------------------------------------------------------
# cut polytopes


def cut_polytope(g: Graph) -> VPolytope:
    if g.m == 0:
        raise PolytopeError("the cut polytope needs at least one edge")
    return VPolytope(g.m, tuple(_cut_points(g)))


def _cut_points(g: Graph) -> list[tuple[int, ...]]:
    # a graph without edges has the single empty cut vector
    return sorted({cut_vector(g, p) for p in enumerate_partitions(g)})


def dimension(p: VPolytope) -> int:
    return _affine_rank(list(p.vertices))


# ---------------------------------------------------------------------------
# faces


@dataclass
class FaceLattice:
    polytope: VPolytope
    faces: dict[int, list[frozenset[int]]] = field(default_factory=dict)

    def f_vector(self) -> tuple[int, ...]:
        d = dimension(self.polytope)
        return tuple(len(self.faces.get(k, [])) for k in range(d))

    def of_dim(self, k: int) -> list[frozenset[int]]:
        return self.faces.get(k, [])


def face_lattice(p: VPolytope, h: HPolytope | None = None) -> FaceLattice:
    """All nonempty faces as vertex-index sets, grouped by dimension.

    A face is an intersection of facet vertex sets; the polytope itself is
    the empty intersection and sits in dimension ``dim P``.
    """
    h = h or double_description(p)
    verts = list(p.vertices)
    facet_sets = []
    for a, b in h.inequalities:
        facet_sets.append(frozenset(i for i, v in enumerate(verts) if sum(x * y for x, y in zip(a, v)) == b))
    full = frozenset(range(len(verts)))
    found = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for f in frontier:
            for s in facet_sets:
                g = f & s
                if g and g not in found:
                    found.add(g)
                    nxt.append(g)
        frontier = nxt
    faces: dict[int, list] = {}
    for f in found:
        k = _affine_rank([verts[i] for i in sorted(f)])
        faces.setdefault(k, []).append(f)
    for k in faces:
        faces[k].sort(key=lambda s: sorted(s))
    return FaceLattice(p, faces)


def faces_of_dim(p: VPolytope, h: HPolytope | None, k: int) -> list[frozenset[int]]:
    return face_lattice(p, h).of_dim(k)


def f_vector(p: VPolytope, h: HPolytope | None = None) -> tuple[int, ...]:
    return face_lattice(p, h).f_vector()


def euler_check(fv: Sequence[int]) -> bool:
    """Boundary of a ``d``-polytope is a ``(d-1)``-sphere."""
    d = len(fv)
    return sum((-1) ** i * f for i, f in enumerate(fv)) == 1 - (-1) ** d


# ---------------------------------------------------------------------------
# the contraction face map


@dataclass
class FaceMapReport:
    graph: Graph
    edge: tuple[int, int]
    contracted: Graph
    common_neighbors: tuple[int, ...]
    contracted_order: tuple[int, ...]   # edge indices of G' in arranged order
    graph_order: tuple[int, ...]        # edge indices of G in arranged order
    face_vertices: int
    image_vertices: int
    is_face: bool
    bijective: bool
    injective_linear: bool

    @property
    def passed(self) -> bool:
        return self.is_face and self.bijective and self.injective_linear

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} contract {self.edge[0]}-{self.edge[1]}: face x_e=0 has {self.face_vertices} vertices, "
                f"image of Cut(G') has {self.image_vertices}; permutation {list(self.graph_order)}")


def contraction_face_map(g: Graph, e: Sequence[int]) -> FaceMapReport:
    """Check that ``beta -> (beta, 0, beta^(p))`` embeds Cut(G/e) as the face ``x_e = 0``.

    Coordinates of ``G' = G/e`` (merged vertex ``w``): the edges ``w v_i`` to
    the common neighbours ``v_1 < ... < v_p`` of ``u`` and ``v``, then every
    other edge in canonical order.  Coordinates of ``G``: ``u v_i``, then the
    edges corresponding to the remaining edges of ``G'`` in the same order,
    then ``e``, then ``v v_i``.
    """
    u, v = sorted(int(x) for x in e)
    if (u, v) not in g.edge_index:
        raise GraphError(f"{u}-{v} is not an edge")
    gc, mapping = contract_edge(g, (u, v))
    w = mapping[u]
    inv = {}
    for old, new in mapping.items():
        if old not in (u, v):
            inv[new] = old
    common = tuple(sorted(g.neighbors(u) & g.neighbors(v)))
    cidx = gc.edge_index
    first = [cidx[tuple(sorted((w, mapping[z])))] for z in common]
    rest = [k for k in range(gc.m) if k not in set(first)]
    contracted_order = tuple(first + rest)

    def preimage(k):
        a, b = gc.edges[k]
        if w in (a, b):
            z = inv[b if a == w else a]
            if g.has_edge(u, z):
                return g.edge_index[tuple(sorted((u, z)))]
            return g.edge_index[tuple(sorted((v, z)))]
        return g.edge_index[tuple(sorted((inv[a], inv[b])))]

    gidx = g.edge_index
    graph_order = ([gidx[tuple(sorted((u, z)))] for z in common] + [preimage(k) for k in rest]
                   + [gidx[(u, v)]] + [gidx[tuple(sorted((v, z)))] for z in common])
    if sorted(graph_order) != list(range(g.m)):
        raise GraphError("coordinate arrangement does not cover the edges of G")
    p = len(common)
    # linear map L: R^{E'} -> R^{E} in canonical coordinates
    L = [[0] * gc.m for _ in range(g.m)]
    for pos, k in enumerate(contracted_order):
        L[graph_order[pos]][k] = 1
    for t in range(p):
        L[graph_order[gc.m + 1 + t]][contracted_order[t]] = 1
    image = set()
    points = _cut_points(gc)
    for beta in points:
        image.add(tuple(sum(L[r][c] * beta[c] for c in range(gc.m)) for r in range(g.m)))
    pg = cut_polytope(g)
    ei = gidx[(u, v)]
    face = {x for x in pg.vertices if x[ei] == 0}
    is_face = all(x[ei] >= 0 for x in pg.vertices) and bool(face)
    return FaceMapReport(
        graph=g, edge=(u, v), contracted=gc, common_neighbors=common,
        contracted_order=contracted_order, graph_order=tuple(graph_order),
        face_vertices=len(face), image_vertices=len(image),
        is_face=is_face,
        bijective=image == face and len(image) == len(points),
        injective_linear=_rank(L) == gc.m,
    )


# ---------------------------------------------------------------------------


@dataclass
class OhsugiCertificate:
    square_vertices: int
    square_dim: int
    two_face_vertex_counts: tuple[int, ...]
    two_faces: int

    @property
    def not_a_face(self) -> bool:
        return self.square_dim == 2 and self.square_vertices not in self.two_face_vertex_counts

    def text(self) -> str:
        counts = sorted(set(self.two_face_vertex_counts))
        lines = [
            f"Cut(P3) is a 2-dimensional polytope with {self.square_vertices} vertices.",
            f"Cut(C4) has {self.two_faces} two-dimensional faces with vertex counts {counts}.",
            "An affine isomorphism preserves vertex counts, so no 2-face of Cut(C4) is affinely isomorphic to Cut(P3).",
            f"verdict: {'not-a-face' if self.not_a_face else 'inconclusive'}",
        ]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"square_vertices": self.square_vertices, "square_dim": self.square_dim,
                "two_faces": self.two_faces,
                "two_face_vertex_counts": sorted(set(self.two_face_vertex_counts)),
                "verdict": "not-a-face" if self.not_a_face else "inconclusive"}


def ohsugi_counterexample_certificate() -> OhsugiCertificate:
    from .catalog import cycle, path

    sq = cut_polytope(path(3))
    cp = cut_polytope(cycle(4))
    two = face_lattice(cp).of_dim(2)
    return OhsugiCertificate(len(sq), dimension(sq), tuple(len(f) for f in two), len(two))
