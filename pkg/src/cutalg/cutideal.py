"""Cut rings, the monomial map of a graph and its kernel (the cut ideal).

The cut ideal is computed in two unrelated ways:

* ``cut_ideal_elimination``: eliminate the ``s``/``t`` variables from the
  graph ideal ``<q_A - phi(q_A)>``;
* ``cut_ideal_lattice``: take binomials of an integer kernel basis of the
  exponent matrix and saturate by every variable.

Both return reduced degrevlex bases in the same ring, so they can be
compared term for term.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graphs import Graph, Partition, cut_vector, enumerate_partitions
from .groebner import (GroebnerBasis, buchberger, eliminate, krull_dimension, monomials_of_degree,
                       normal_form, saturate, saturate_by_variable, standard_monomials)
from .linalg import integer_kernel, rank_mod_p
from .poly import DEFAULT_PRIME, Polynomial, PolyRing, TermOrder

MAX_ELIMINATION_VARS = 30
MAX_LATTICE_VARS = 32


class SizeGuardError(RuntimeError):
    """A computation was refused because the input exceeds a configured size."""


class CutRing:
    """Polynomial ring with one variable ``q_A`` per canonical partition."""

    def __init__(self, graph: Graph, prime: int = DEFAULT_PRIME):
        self.graph = graph
        self.prime = prime
        self.partitions: list[Partition] = enumerate_partitions(graph)
        self.ring = PolyRing([f"q_{p.label}" for p in self.partitions], prime)
        self._by_mask = {p.mask: i for i, p in enumerate(self.partitions)}

    @property
    def nvars(self) -> int:
        return len(self.partitions)

    def index(self, a) -> int:
        """Variable index of a partition, a vertex set, or a label like ``"23"``."""
        if isinstance(a, Partition):
            return self._by_mask[a.mask]
        if isinstance(a, str):
            a = [] if a in ("0", "") else [int(ch) for ch in a]
        return self._by_mask[Partition.from_set(self.graph.n, a).mask]

    def q(self, a) -> Polynomial:
        return self.ring.var(self.index(a))

    @cached_property
    def cut_vectors(self) -> np.ndarray:
        """``N x |E|`` matrix; row ``A`` is the cut vector of ``A``."""
        return np.array([cut_vector(self.graph, p) for p in self.partitions], dtype=np.int64).reshape(
            self.nvars, self.graph.m)

    @cached_property
    def exponent_matrix(self) -> np.ndarray:
        """``2|E| x N`` matrix whose column ``A`` is the multidegree of ``q_A``."""
        d = self.cut_vectors.T
        return np.vstack([d, 1 - d])

    def multidegree(self, e) -> tuple[int, ...]:
        return tuple(int(x) for x in self.exponent_matrix @ np.asarray(e, dtype=np.int64))

    def bidegree(self, e) -> tuple[int, int]:
        s = int(self.cut_vectors.sum(axis=1) @ np.asarray(e, dtype=np.int64))
        return s, 2 * self.graph.m * sum(e) - s

    def deg_s(self, a) -> int:
        return int(self.cut_vectors[self.index(a)].sum())

    def deg_t(self, a) -> int:
        return 2 * self.graph.m - self.deg_s(a)


def phi_ring(g: Graph, prime: int = DEFAULT_PRIME) -> PolyRing:
    """Target ring of the monomial map: ``s_ij`` then ``t_ij`` per edge."""
    names = [f"s_{i}{j}" for i, j in g.edges] + [f"t_{i}{j}" for i, j in g.edges]
    return PolyRing(names, prime)


def phi_eval(g: Graph, p: Partition, ring: PolyRing | None = None) -> Polynomial:
    """Image of ``q_A``: product of ``s_e`` over cut edges and ``t_e`` over the rest."""
    ring = ring or phi_ring(g)
    c = cut_vector(g, p)
    return ring.monomial(tuple(c) + tuple(1 - x for x in c))


def kernel_membership(cr: CutRing, b: Polynomial) -> bool:
    """Whether the pure binomial ``b`` lies in the cut ideal."""
    if not b.is_binomial():
        raise ValueError(f"{b} is not a pure binomial")
    (a, _), (c, _) = b.terms
    return cr.multidegree(a) == cr.multidegree(c)


@dataclass
class CutIdeal:
    cut_ring: CutRing
    gb: GroebnerBasis
    method: str

    @property
    def graph(self) -> Graph:
        return self.cut_ring.graph

    @property
    def ring(self) -> PolyRing:
        return self.cut_ring.ring

    def is_zero(self) -> bool:
        return self.gb.is_zero_ideal()

    def krull_dimension(self) -> int:
        return krull_dimension(self.gb)

    def height(self) -> int:
        return self.cut_ring.nvars - self.krull_dimension()

    def linear_forms(self) -> list[Polynomial]:
        """Degree-one part of the reduced basis; its size is ``dim (I)_1``."""
        return [g for g in self.gb if g.degree() == 1]

    def binomials(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Each basis element as ``(a, c)`` meaning ``q^a - q^c``, ``a`` lex-larger."""
        out = []
        for g in self.gb:
            if not g.is_binomial():
                raise ValueError(f"basis element {g} is not a pure binomial")
            a, c = g.terms[0][0], g.terms[1][0]
            out.append((a, c) if a > c else (c, a))
        return out

    def normalized(self) -> list[Polynomial]:
        return [self.ring.binomial(a, c) for a, c in self.binomials()]

    def contains(self, f: Polynomial) -> bool:
        return self.gb.contains(f)


def _cut_ring(g, prime) -> CutRing:
    return g if isinstance(g, CutRing) else CutRing(g, prime)


def cut_ideal_elimination(g: Graph | CutRing, prime: int = DEFAULT_PRIME,
                          max_vars: int = MAX_ELIMINATION_VARS) -> CutIdeal:
    """Kernel of the monomial map by eliminating ``s``, ``t`` from ``<q_A - phi(q_A)>``."""
    cr = _cut_ring(g, prime)
    graph = cr.graph
    m = graph.m
    n_st = 2 * m
    total = n_st + cr.nvars
    if total > max_vars:
        raise SizeGuardError(f"elimination ring would have {total} variables (limit {max_vars})")
    names = phi_ring(graph).names + cr.ring.names
    # weights make q_A - phi(q_A) homogeneous (both sides have weight |E|)
    weights = (1,) * n_st + (max(m, 1),) * cr.nvars
    big = PolyRing(names, cr.prime, TermOrder.block(n_st, weights))
    cols = cr.exponent_matrix
    gens = []
    for k in range(cr.nvars):
        q = [0] * total
        q[n_st + k] = 1
        gens.append(big.from_terms([(q, 1), (tuple(int(x) for x in cols[:, k]) + (0,) * cr.nvars, -1)]))
    if n_st == 0:
        return CutIdeal(cr, GroebnerBasis(cr.ring, ()), "elimination")
    gb = buchberger(gens, ring=big)
    small = eliminate(gb, n_st)
    back = [cr.ring.from_dict(f.as_dict()) for f in small]
    return CutIdeal(cr, buchberger(back, ring=cr.ring) if back else GroebnerBasis(cr.ring, ()), "elimination")


def lattice_kernel(matrix) -> list[list[int]]:
    return integer_kernel(matrix)


def lattice_basis_ideal(cr: CutRing) -> list[Polynomial]:
    """Binomials ``q^{v+} - q^{v-}`` for a kernel basis ``v`` of the exponent matrix."""
    out = []
    for v in lattice_kernel(cr.exponent_matrix):
        pos = tuple(max(x, 0) for x in v)
        neg = tuple(max(-x, 0) for x in v)
        out.append(cr.ring.binomial(pos, neg))
    return out


def cut_ideal_lattice(g: Graph | CutRing, prime: int = DEFAULT_PRIME, max_vars: int = MAX_LATTICE_VARS,
                      generic_saturation: bool = False) -> CutIdeal:
    """Kernel of the monomial map as the saturation of a lattice basis ideal.

    Saturates by one variable at a time, most frequent variable first.  The default uses the reverse
    lexicographic trick (the ideal stays homogeneous); ``generic_saturation``
    uses an auxiliary variable ``t`` and the relation ``t * q_A - 1`` instead.
    """
    cr = _cut_ring(g, prime)
    if cr.nvars > max_vars:
        raise SizeGuardError(f"cut ring has {cr.nvars} variables (limit {max_vars})")
    gens = lattice_basis_ideal(cr)
    if not gens:
        return CutIdeal(cr, GroebnerBasis(cr.ring, ()), "lattice")
    current = list(gens)
    gb = None
    todo = set(range(cr.nvars))
    while todo:
        # the most frequent variable first keeps intermediate bases small
        count = {i: sum(1 for f in current for e, _ in f.terms if e[i]) for i in todo}
        i = max(sorted(todo), key=lambda v: count[v])
        todo.discard(i)
        if generic_saturation:
            m = [0] * cr.nvars
            m[i] = 1
            gb = saturate(current, m, ring=cr.ring)
        else:
            gb = saturate_by_variable(current, i, ring=cr.ring)
        current = list(gb)
    return CutIdeal(cr, gb, "lattice")


def cut_ideal(g: Graph | CutRing, prime: int = DEFAULT_PRIME, method: str = "lattice") -> CutIdeal:
    if method == "lattice":
        return cut_ideal_lattice(g, prime)
    if method == "elimination":
        return cut_ideal_elimination(g, prime)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# minimal generators


def _pieces_by_multidegree(cr: CutRing, monomials):
    blocks = defaultdict(list)
    for e in monomials:
        blocks[cr.multidegree(e)].append(e)
    return blocks


def minimal_generators(ideal: CutIdeal, max_degree: int | None = None) -> dict[int, int]:
    """``{j: beta_{0,j}}`` from graded linear algebra on the reduced basis.

    In each degree ``j`` and multidegree ``b``: ``dim I_b`` is the number of
    monomials of ``S_b`` lying in the leading ideal, and
    ``(m I)_b`` is spanned by ``w * g`` with ``g`` in the basis and ``w`` a
    monomial of positive degree.  Minimal generators live in degrees at most
    the top degree of the reduced basis.
    """
    gb = ideal.gb
    if gb.is_zero_ideal():
        return {}
    cr = ideal.cut_ring
    ring = cr.ring
    p = ring.prime
    top = max(g.degree() for g in gb)
    if max_degree is not None and top > max_degree:
        raise SizeGuardError(f"basis reaches degree {top} (bound {max_degree})")
    by_deg = defaultdict(list)
    for g in gb:
        by_deg[g.degree()].append(g)
    out = {}
    for j in range(1, top + 1):
        mons = monomials_of_degree(ring.n, j)
        std = set(standard_monomials(gb, j))
        blocks = _pieces_by_multidegree(cr, mons)
        # spanning set of (m I)_j grouped by multidegree
        span = defaultdict(list)
        for dg, gs in by_deg.items():
            if dg >= j:
                continue
            for w in monomials_of_degree(ring.n, j - dg):
                for g in gs:
                    f = g.mul_monomial(w)
                    span[cr.multidegree(f.lm)].append(f)
        total = 0
        for b, piece in blocks.items():
            dim_i = sum(1 for e in piece if e not in std)
            if not dim_i:
                continue
            fs = span.get(b, [])
            if fs:
                col = {e: k for k, e in enumerate(piece)}
                mat = np.zeros((len(fs), len(piece)), dtype=np.int64)
                for r, f in enumerate(fs):
                    for e, c in f.terms:
                        mat[r, col[e]] = c
                rk = rank_mod_p(mat, p)
            else:
                rk = 0
            total += dim_i - rk
        if total:
            out[j] = total
    return out


def fiber_minimal_generators(cr: CutRing, max_degree: int) -> dict[int, int]:
    """Independent count: ``beta_{0,b}`` is (#components - 1) of the fiber graph.

    The fiber of ``b`` is the set of monomials of multidegree ``b``; two are
    joined when they share a variable.  Only valid for toric ideals.
    """
    out = {}
    for j in range(1, max_degree + 1):
        blocks = _pieces_by_multidegree(cr, monomials_of_degree(cr.nvars, j))
        total = 0
        for piece in blocks.values():
            if len(piece) < 2:
                continue
            parent = list(range(len(piece)))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            owner = {}
            for k, e in enumerate(piece):
                for v, x in enumerate(e):
                    if x:
                        if v in owner:
                            parent[find(k)] = find(owner[v])
                        else:
                            owner[v] = k
            total += len({find(k) for k in range(len(piece))}) - 1
        if total:
            out[j] = total
    return out


def check_homogeneity(ideal: CutIdeal) -> bool:
    """Every basis element is a multigraded-homogeneous pure binomial."""
    cr = ideal.cut_ring
    for a, c in ideal.binomials():
        if cr.multidegree(a) != cr.multidegree(c) or cr.bidegree(a) != cr.bidegree(c):
            return False
    return True


def shares_variable(ideal: CutIdeal) -> bool:
    """True if some basis binomial has a variable common to both monomials."""
    return any(any(x and y for x, y in zip(a, c)) for a, c in ideal.binomials())


__all__ = [
    "CutRing", "CutIdeal", "SizeGuardError", "phi_ring", "phi_eval", "kernel_membership",
    "cut_ideal_elimination", "cut_ideal_lattice", "cut_ideal", "lattice_kernel", "lattice_basis_ideal",
    "minimal_generators", "fiber_minimal_generators", "check_homogeneity", "shares_variable"
]
