"""Graded Betti numbers of cut ideals via Koszul homology.

Two routes, both over GF(p):

``artinian``
    Split off linear forms, then cut ``S/I`` down by ``dim S/I`` random
    linear forms.  When the quotient ``A`` has length equal to the
    multiplicity of ``S/I`` the forms are a regular sequence (so ``S/I`` is
    Cohen-Macaulay) and the Betti numbers of ``S/I`` over ``S`` are those of
    the finite-dimensional algebra ``A`` over the smaller polynomial ring,
    which are read off the (finite) Koszul complex of ``A``.

``multigraded``
    For a toric ideal every multigraded piece of ``S/I`` has dimension at
    most one, and the Koszul complex in multidegree ``b`` is the chain
    complex of ``{F : b - sum_{v in F} deg(x_v) is a degree of S/I}``.  This
    needs a degree bound and is used as an independent check and as the
    fallback for non-Cohen-Macaulay rings.

Tables are stored in the ideal's convention: ``beta_{0,j}`` counts minimal
generators of degree ``j``, and ``beta_{i,j}(I) = beta_{i+1,j}(S/I)``.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .cutideal import CutIdeal, CutRing, SizeGuardError
from .groebner import GroebnerBasis, buchberger, hilbert_series, krull_dimension, standard_monomials
from .linalg import rank_mod_p, rref_mod_p
from .poly import PolyRing, TermOrder

MAX_MULTIGRADED_VARS = 12
ARTINIAN_ATTEMPTS = 3


@dataclass
class BettiTable:
    """``values[(i, j)] = beta_{i,j}(I)`` for the ideal ``I``."""

    values: dict = field(default_factory=dict)
    truncated: bool = False
    prime: int = 0
    method: str = ""
    cohen_macaulay: bool | None = None

    def __getitem__(self, ij) -> int:
        return self.values.get(ij, 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.values.items()) if v}

    def quotient(self) -> dict:
        """Betti numbers of ``S/I``."""
        out = {(0, 0): 1}
        for (i, j), v in self.values.items():
            if v:
                out[(i + 1, j)] = v
        return out

    def totals(self, quotient: bool = False) -> list[int]:
        vals = self.quotient() if quotient else self.nonzero()
        if not vals:
            return []
        top = max(i for i, _ in vals)
        return [sum(v for (i, _), v in vals.items() if i == k) for k in range(top + 1)]

    def is_zero(self) -> bool:
        return not self.nonzero()

    @property
    def projdim(self) -> int | None:
        nz = self.nonzero()
        return max(i for i, _ in nz) if nz else None

    @property
    def regularity(self) -> int | None:
        nz = self.nonzero()
        return max(j - i for i, j in nz) if nz else None

    @property
    def mindeg(self) -> int | None:
        ds = [j for (i, j) in self.nonzero() if i == 0]
        return min(ds) if ds else None

    @property
    def maxdeg(self) -> int | None:
        ds = [j for (i, j) in self.nonzero() if i == 0]
        return max(ds) if ds else None

    def generator_degrees(self) -> dict[int, int]:
        return {j: v for (i, j), v in self.nonzero().items() if i == 0}

    def is_linear(self) -> bool:
        """All ``beta_{i,j}`` sit on one strand ``j = i + d``."""
        return len({j - i for i, j in self.nonzero()}) <= 1

    def le(self, other: "BettiTable") -> bool:
        """Entrywise ``<=``."""
        return all(v <= other[k] for k, v in self.nonzero().items())

    def diagram(self) -> str:
        """Diagram of ``S/I`` with rows ``j - i`` and columns ``i``."""
        vals = self.quotient()
        top_i = max(i for i, _ in vals)
        rows = sorted({j - i for i, j in vals})
        rows = list(range(rows[0], rows[-1] + 1))
        cells = [[str(vals.get((i, r + i), 0) or ".") for i in range(top_i + 1)] for r in rows]
        tot = [str(t) for t in self.totals(quotient=True)]
        width = max(len(c) for c in [*tot, *(x for row in cells for x in row), str(top_i)])
        label = max(len("total:"), max(len(f"{r}:") for r in rows))
        lines = [" " * label + " " + " ".join(str(i).rjust(width) for i in range(top_i + 1)),
                 "total:".rjust(label) + " " + " ".join(t.rjust(width) for t in tot)]
        for r, row in zip(rows, cells):
            lines.append(f"{r}:".rjust(label) + " " + " ".join(x.rjust(width) for x in row))
        if self.truncated:
            lines.append("(truncated)")
        return "\n".join(lines)

    def to_json(self, graph: str = "") -> dict:
        return {
            "graph": graph,
            "p": self.prime,
            "betti": [[i, j, v] for (i, j), v in sorted(self.nonzero().items())],
            "reg": self.regularity,
            "projdim": self.projdim,
            "mindeg": self.mindeg,
            "maxdeg": self.maxdeg,
            "truncated": self.truncated,
        }

    def dumps(self, graph: str = "") -> str:
        return json.dumps(self.to_json(graph), sort_keys=True)


def invariants_from_table(t: BettiTable) -> tuple:
    """``(reg, projdim, mindeg, maxdeg)`` of the ideal."""
    return t.regularity, t.projdim, t.mindeg, t.maxdeg


def _from_quotient(q: dict, **kw) -> BettiTable:
    return BettiTable({(i - 1, j): v for (i, j), v in q.items() if i >= 1 and v}, **kw)


# ---------------------------------------------------------------------------
# linear forms


def split_linear_forms(gb: GroebnerBasis) -> tuple[int, GroebnerBasis]:
    """Remove the degree-one elements of a reduced homogeneous degrevlex basis.

    The remaining elements involve none of the removed leading variables, so
    they form a reduced basis of an ideal ``I'`` in the other variables with
    ``S/I = S'/I'``.
    """
    lin = [g for g in gb if g.degree() == 1]
    if not lin:
        return 0, gb
    gone = {g.lm.index(1) for g in lin}
    keep = [i for i in range(gb.ring.n) if i not in gone]
    sub = PolyRing([gb.ring.names[i] for i in keep], gb.ring.prime, TermOrder.degrevlex())
    rest = []
    for g in gb:
        if g.degree() == 1:
            continue
        rest.append(sub.from_dict({tuple(e[i] for i in keep): c for e, c in g.terms}))
    return len(lin), buchberger(rest, ring=sub) if rest else GroebnerBasis(sub, ())


def _tensor_koszul(q: dict, linear: int) -> dict:
    """Betti numbers of ``S/I`` after adjoining ``linear`` independent linear forms."""
    if not linear:
        return dict(q)
    out = defaultdict(int)
    for (i, j), v in q.items():
        for k in range(linear + 1):
            out[(i + k, j + k)] += v * comb(linear, k)
    return dict(out)


# ---------------------------------------------------------------------------
# Artinian route


@dataclass
class ArtinianReduction:
    """Graded algebra ``A = S/(I + theta)`` stored by its multiplication maps.

    ``dims[k]`` is ``dim_K A_k`` and ``mult[k][i]`` the matrix of ``y_i``
    from ``A_k`` to ``A_{k+1}`` in the chosen bases.
    """
    nvars: int                 # number of kept variables y_i
    prime: int
    dims: list
    mult: list
    multiplicity: int          # of the original S/I
    dimension: int             # Krull dimension of the original S/I
    forms: list = field(default_factory=list, repr=False)

    @property
    def length(self) -> int:
        return sum(self.dims)

    @property
    def certified(self) -> bool:
        """Finite length equal to the multiplicity: the forms are a regular sequence."""
        return bool(self.dims) and self.dims[-1] == 0 and self.length == self.multiplicity


def artinian_reduction(gb: GroebnerBasis, seed: int = 0, attempts: int = ARTINIAN_ATTEMPTS) -> ArtinianReduction:
    """Quotient by ``dim S/I`` random linear forms (the last variables are solved for).

    ``A`` is built one degree at a time as
    ``A_{k+1} = (S'_1 (x) A_k) / (Koszul relations + images of generators)``,
    so only matrices of size about ``nvars * dim A_k`` are ever reduced.
    """
    ring = gb.ring
    h, d = hilbert_series(gb)
    e = sum(h)
    if krull_dimension(gb) != d:
        raise AssertionError("Hilbert series and leading-monomial dimension disagree")
    c = ring.n - d
    rng = random.Random(seed)
    last = None
    for _ in range(attempts):
        forms = [np.eye(c, dtype=np.int64)[i] for i in range(c)]
        forms += [np.array([rng.randrange(1, ring.prime) for _ in range(c)], dtype=np.int64) for _ in range(d)]
        last = _build_artinian(gb, forms, c, d, e)
        if last.certified:
            return last
    return last


def _build_artinian(gb: GroebnerBasis, forms: list, c: int, d: int, e: int) -> ArtinianReduction:
    p = gb.ring.prime
    by_degree = defaultdict(list)
    for g in gb:
        by_degree[g.degree()].append(g)
    dims = [1]
    mult: list = []
    nf_cache: dict = {(0,) * gb.ring.n: np.ones(1, dtype=np.int64)}

    def nf(exp):
        # class of the monomial x^exp in A_{deg}
        if exp not in nf_cache:
            v = next(i for i, a in enumerate(exp) if a)
            rest = list(exp)
            rest[v] -= 1
            prev = nf(tuple(rest))
            k = sum(rest)
            out = np.zeros(dims[k + 1], dtype=np.int64)
            for i in range(c):
                if forms[v][i]:
                    out = (out + forms[v][i] * (mult[k][i] @ prev)) % p
            nf_cache[exp] = out
        return nf_cache[exp]

    k = 0
    while dims[-1]:
        a_k = dims[k]
        width = c * a_k
        rows = []
        if k >= 1:
            for s in range(dims[k - 1]):
                for i, j in combinations(range(c), 2):
                    row = np.zeros(width, dtype=np.int64)
                    row[i * a_k:(i + 1) * a_k] += mult[k - 1][j][:, s]
                    row[j * a_k:(j + 1) * a_k] -= mult[k - 1][i][:, s]
                    rows.append(row % p)
        for g in by_degree.get(k + 1, ()):
            row = np.zeros(width, dtype=np.int64)
            for exp, coef in g.terms:
                v = next(i for i, a in enumerate(exp) if a)
                rest = list(exp)
                rest[v] -= 1
                row = (row + coef * np.outer(forms[v], nf(tuple(rest))).reshape(-1)) % p
            rows.append(row)
        if rows and width:
            red, piv = rref_mod_p(np.array(rows), p)
        else:
            red, piv = np.zeros((0, width), dtype=np.int64), []
        pivset = set(piv)
        free = [col for col in range(width) if col not in pivset]
        proj = np.zeros((len(free), width), dtype=np.int64)
        for r, col in enumerate(free):
            proj[r, col] = 1
        for r, col in enumerate(piv):
            proj[:, col] = (-red[r, free]) % p
        mult.append([proj[:, i * a_k:(i + 1) * a_k] for i in range(c)])
        dims.append(len(free))
        k += 1
        if sum(dims) > e:
            break
    return ArtinianReduction(c, p, dims, mult, e, d, forms)


def finite_koszul_betti(red: ArtinianReduction, i_max: int | None = None) -> dict:
    """Betti numbers over ``K[y_1..y_c]`` of the finite algebra ``A``.

    Read off the Koszul complex ``Lambda^i K^c (x) A_{j-i}``; ``i_max`` stops
    at homological degree ``i_max``.
    """
    c = red.nvars
    p = red.prime
    dims = [a for a in red.dims if a]
    top = len(dims) - 1
    cols = {}

    def times(v, k, t):
        key = (v, k, t)
        if key not in cols:
            col = red.mult[k][v][:, t]
            cols[key] = [(s, int(x)) for s, x in enumerate(col) if x]
        return cols[key]

    def chains(i, j):
        deg = j - i
        if deg < 0 or deg > top or i > c or i < 0:
            return []
        return [(F, u) for F in combinations(range(c), i) for u in range(dims[deg])]

    def rank_d(i, j):
        # d: C_{i,j} -> C_{i-1,j}
        if i == 0:
            return 0
        src = chains(i, j)
        dst = chains(i - 1, j)
        if not src or not dst:
            return 0
        index = {x: t for t, x in enumerate(dst)}
        mat = np.zeros((len(src), len(dst)), dtype=np.int64)
        deg = j - i
        for r, (F, u) in enumerate(src):
            for t, v in enumerate(F):
                sign = 1 if t % 2 == 0 else p - 1
                G = F[:t] + F[t + 1:]
                for s, coef in times(v, deg, u):
                    col = index[(G, s)]
                    mat[r, col] = (mat[r, col] + sign * coef) % p
        return rank_mod_p(mat, p)

    out = {}
    ranks = {}
    last = c if i_max is None else min(c, i_max)
    for i in range(last + 1):
        for j in range(i, i + top + 1):
            n_ij = comb(c, i) * dims[j - i]
            if not n_ij:
                continue
            for key in ((i, j), (i + 1, j)):
                if key not in ranks:
                    ranks[key] = rank_d(*key)
            b = n_ij - ranks[(i, j)] - ranks[(i + 1, j)]
            if b:
                out[(i, j)] = b
    return out


# ---------------------------------------------------------------------------
# multigraded (simplicial) route


def multigraded_betti(ideal: CutIdeal, j_max: int, i_max: int | None = None,
                      max_vars: int = MAX_MULTIGRADED_VARS) -> dict:
    """``beta_{i,j}(S/I)`` for ``j <= j_max`` from the complexes ``Delta_b``."""
    cr = ideal.cut_ring
    N = cr.nvars
    if N > max_vars:
        raise SizeGuardError(f"multigraded Koszul homology limited to {max_vars} variables (got {N})")
    p = ideal.ring.prime
    i_max = N if i_max is None else min(i_max, N)
    eps = [tuple(int(x) for x in cr.exponent_matrix[:, v]) for v in range(N)]
    std = []
    for k in range(j_max + 1):
        std.append({cr.multidegree(u) for u in standard_monomials(ideal.gb, k)})

    def member(b, k):
        return 0 <= k <= j_max and b in std[k]

    def sub(b, F):
        out = list(b)
        for v in F:
            for t, x in enumerate(eps[v]):
                out[t] -= x
        return tuple(out)

    out = defaultdict(int)
    seen = set()
    for j in range(j_max + 1):
        cands = set()
        for i in range(1, min(i_max, j) + 1):
            for beta in std[j - i]:
                for F in combinations(range(N), i):
                    b = list(beta)
                    for v in F:
                        for t, x in enumerate(eps[v]):
                            b[t] += x
                    cands.add(tuple(b))
        if j == 0:
            out[(0, 0)] = 1
        for b in sorted(cands):
            if b in seen:
                continue
            seen.add(b)
            verts = [v for v in range(N) if member(sub(b, (v,)), j - 1)]
            if member(sub(b, verts), j - len(verts)):
                continue  # full simplex: acyclic
            faces = {0: [()]}
            for size in range(1, len(verts) + 1):
                layer = [F for F in combinations(verts, size) if member(sub(b, F), j - size)]
                if not layer:
                    break
                faces[size] = layer
            ranks = {}
            for size in range(1, max(faces) + 1):
                ranks[size] = _boundary_rank(faces[size], faces[size - 1], p)
            for size in range(1, max(faces) + 2):
                # reduced homology in dimension size-1 contributes to beta_{size}
                if size > i_max:
                    break
                dim_c = len(faces.get(size, ()))
                h = dim_c - ranks.get(size, 0) - ranks.get(size + 1, 0)
                if h:
                    out[(size, j)] += h
    return dict(out)


def _boundary_rank(top: list, bottom: list, p: int) -> int:
    if not top or not bottom:
        return 0
    rows = {F: t for t, F in enumerate(bottom)}
    mat = np.zeros((len(top), len(bottom)), dtype=np.int64)
    for r, F in enumerate(top):
        for t in range(len(F)):
            mat[r, rows[F[:t] + F[t + 1:]]] = 1 if t % 2 == 0 else p - 1
    return rank_mod_p(mat, p)


# ---------------------------------------------------------------------------


def graded_betti(ideal: CutIdeal, method: str = "auto", seed: int = 0, j_max: int | None = None,
                 i_max: int | None = None) -> BettiTable:
    """Betti table of the cut ideal.

    ``auto`` tries the Artinian route and falls back to the multigraded one
    (truncated at ``j_max``) when the Cohen-Macaulay certificate fails.
    ``i_max`` limits the homological degree of the ideal's table.
    """
    p = ideal.ring.prime
    if ideal.is_zero():
        return BettiTable({}, False, p, "zero", True)
    if method in ("auto", "artinian"):
        lin, rest = split_linear_forms(ideal.gb)
        if rest.is_zero_ideal():
            q = _tensor_koszul({(0, 0): 1}, lin)
            return _cut(_from_quotient(q, prime=p, method="linear", cohen_macaulay=True), i_max)
        red = artinian_reduction(rest, seed=seed)
        if red.certified:
            q = _tensor_koszul(finite_koszul_betti(red, None if i_max is None else i_max + 1), lin)
            t = _cut(_from_quotient(q, prime=p, method="artinian", cohen_macaulay=True), i_max)
            # the quotient's projective dimension is at most the number of variables
            t.truncated = i_max is not None and i_max + 1 < red.nvars + lin
            return t
        if method == "artinian":
            raise RuntimeError("Artinian reduction not certified (ring not Cohen-Macaulay or unlucky forms)")
    if method not in ("auto", "multigraded"):
        raise ValueError(f"unknown method {method!r}")
    bound = j_max if j_max is not None else 2 * max(g.degree() for g in ideal.gb) + ideal.cut_ring.nvars
    q = multigraded_betti(ideal, bound, None if i_max is None else i_max + 1)
    t = _from_quotient(q, prime=p, method="multigraded", cohen_macaulay=None)
    t.truncated = True
    return t


def cm_regularity(ideal: CutIdeal, seed: int = 0) -> int | None:
    """``reg(I)`` read off a certified Artinian reduction, or None.

    For a Cohen-Macaulay quotient the regularity of ``S/I`` is the top
    degree of its h-vector, which is the Hilbert function of ``A``.
    """
    if ideal.is_zero():
        return None
    lin, rest = split_linear_forms(ideal.gb)
    if rest.is_zero_ideal():
        return 1
    red = artinian_reduction(rest, seed=seed)
    if not red.certified:
        return None
    top = max(k for k, v in enumerate(red.dims) if v)
    return top + 1


def _cut(t: BettiTable, i_max: int | None) -> BettiTable:
    if i_max is None:
        return t
    full = max((i for i, _ in t.nonzero()), default=-1)
    t.values = {k: v for k, v in t.values.items() if k[0] <= i_max}
    t.truncated = full > i_max
    return t


__all__ = [
    "BettiTable", "invariants_from_table", "split_linear_forms", "artinian_reduction", "finite_koszul_betti",
    "multigraded_betti", "graded_betti", "cm_regularity", "CutRing",
]
