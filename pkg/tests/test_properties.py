
import numpy as np
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from cutalg.classify import catalog
from cutalg.cutideal import CutRing, check_homogeneity, cut_ideal_lattice, kernel_membership
from cutalg.graphs import (canonical_form, contract_edge, cut_vector, cut_vector_of_set,
                           enumerate_partitions, relabel)
from cutalg.groebner import buchberger, normal_form
from cutalg.linalg import integer_kernel, nullspace_mod_p, rank_mod_p, rref_mod_p
from cutalg.poly import PolyRing
from cutalg.polytope import contraction_face_map

P = 101
RING = PolyRing(["x", "y", "z"], P)
SMALL = [g for _, g in catalog(4)]
FIVE = [g for _, g in catalog(5, 5)]

terms = st.lists(st.tuples(st.tuples(*[st.integers(0, 3)] * 3), st.integers(0, P - 1)), max_size=5)


def poly(ts):
    return RING.from_terms(ts)


def to_sympy(f):
    x, y, z = sympy.symbols("x y z")
    return sympy.Poly(sum(c * x ** e[0] * y ** e[1] * z ** e[2] for e, c in f.terms) + 0 * x, x, y, z, modulus=P)


@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    f, g, h = poly(a), poly(b), poly(c)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f - g) + g == f


@given(terms, terms)
def test_product_matches_sympy(a, b):
    f, g = poly(a), poly(b)
    assert to_sympy(f * g) == to_sympy(f) * to_sympy(g)


@settings(max_examples=40, deadline=None)
@given(terms, st.lists(terms, min_size=1, max_size=3))
def test_normal_form_properties(a, gens):
    gs = [poly(t) for t in gens if poly(t)]
    if not gs:
        return
    gb = buchberger(gs, ring=RING)
    f = poly(a)
    r = normal_form(f, gb)
    assert normal_form(r, gb) == r
    assert gb.contains(f - r)
    for m in r.monomials():
        assert not any(all(x >= y for x, y in zip(m, g.lm)) for g in gb)


matrices = st.integers(1, 9).flatmap(lambda r: st.integers(1, 9).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 12), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices, st.sampled_from([2, 3, 7, 101, 32003]))
def test_rank_against_sympy(rows, p):
    a = np.array(rows, dtype=np.int64)
    expected = DomainMatrix([[GF(p)(int(x)) for x in row] for row in rows], a.shape, GF(p)).rank()
    assert rank_mod_p(a, p) == expected == len(rref_mod_p(a, p)[1])
    assert rank_mod_p(a.T, p) == expected


@given(matrices)
def test_nullspace(rows):
    a = np.array(rows, dtype=np.int64)
    n = nullspace_mod_p(a, 101)
    assert not ((a @ n.T) % 101).any()
    assert n.shape[0] == a.shape[1] - rank_mod_p(a, 101)


@settings(max_examples=30)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=4))
def test_integer_kernel(rows):
    a = sympy.Matrix(rows)
    k = integer_kernel(rows)
    assert len(k) == 5 - a.rank()
    for v in k:
        assert a * sympy.Matrix(v) == sympy.zeros(len(rows), 1)


@given(st.sampled_from(SMALL + FIVE), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(g, rnd):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@given(st.sampled_from(SMALL + FIVE), st.data())
def test_cut_vector_complement(g, data):
    p = data.draw(st.sampled_from(enumerate_partitions(g)))
    assert cut_vector_of_set(g, p.complement()) == cut_vector(g, p)
    assert sum(cut_vector(g, p)) == sum(1 for i, j in g.edges if p.contains(i) != p.contains(j))


@given(st.sampled_from([g for g in SMALL + FIVE if g.m]), st.data())
def test_contraction_shrinks(g, data):
    e = data.draw(st.sampled_from(g.edges))
    h, mapping = contract_edge(g, e)
    assert h.n == g.n - 1 and h.m <= g.m - 1
    assert sorted(set(mapping.values())) == list(h.vertices)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from([g for g in SMALL + FIVE if g.m]), st.data())
def test_face_map_random_edge(g, data):
    e = data.draw(st.sampled_from(g.edges))
    assert contraction_face_map(g, e).passed


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([g for g in SMALL if g.m >= 2]))
def test_basis_elements_lie_in_kernel(g):
    ideal = cut_ideal_lattice(g)
    assert check_homogeneity(ideal)
    assert all(kernel_membership(ideal.cut_ring, f) for f in ideal.gb)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(FIVE), st.randoms(use_true_random=False))
def test_random_binomials_from_equal_cut_sums(g, rnd):
    # two multisets of cuts with equal sums give a kernel element, and conversely
    cr = CutRing(g)
    a = [rnd.randrange(cr.nvars) for _ in range(3)]
    b = [rnd.randrange(cr.nvars) for _ in range(3)]
    ea, eb = [0] * cr.nvars, [0] * cr.nvars
    for i in a:
        ea[i] += 1
    for i in b:
        eb[i] += 1
    if ea == eb:
        return
    f = cr.ring.binomial(ea, eb)
    same = (cr.cut_vectors[a].sum(axis=0) == cr.cut_vectors[b].sum(axis=0)).all()
    assert kernel_membership(cr, f) == bool(same)
