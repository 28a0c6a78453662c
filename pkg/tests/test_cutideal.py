from itertools import combinations

import pytest

from cutalg.catalog import complete, cycle, parse_graph, path
from cutalg.classify import catalog
from cutalg.cutideal import (CutRing, SizeGuardError, check_homogeneity, cut_ideal_elimination, cut_ideal_lattice,
                             fiber_minimal_generators, kernel_membership, minimal_generators, phi_eval,
                             shares_variable)
from cutalg.graphs import Partition
from cutalg.groebner import standard_monomials

import oracles


def mono(cr, *labels):
    """Product of ``q_A`` for vertex-set labels; either side of a partition may be named."""
    f = cr.ring.one()
    for a in labels:
        f = f * cr.q(a)
    return f


def test_exponent_matrix_shape():
    cr = CutRing(cycle(4))
    m = cr.exponent_matrix
    assert m.shape == (8, 8)
    assert (m.sum(axis=0) == 4).all()
    assert list(m[:, cr.index("0")]) == [0] * 4 + [1] * 4
    assert cr.deg_s("13") == 4 and cr.deg_t("13") == 4


def test_phi_eval():
    g = path(3)
    assert str(phi_eval(g, Partition.from_set(3, [2]))) == "s_12*s_23"
    assert str(phi_eval(g, Partition.from_set(3, []))) == "t_12*t_23"


def test_kernel_membership_small():
    k4 = CutRing(complete(4))
    f = mono(k4, "1", "2", "3", "4") - mono(k4, "0", "12", "13", "14")
    assert kernel_membership(k4, f)
    assert not kernel_membership(k4, mono(k4, "1", "2") - mono(k4, "0", "12"))
    with pytest.raises(ValueError):
        kernel_membership(k4, mono(k4, "1") + mono(k4, "2") + mono(k4, "3"))


def test_kernel_membership_k5_relations():
    cr = CutRing(complete(5))
    verts = set(range(1, 6))
    count = 0
    for i, j, k in combinations(sorted(verts), 3):
        l, p = sorted(verts - {i, j, k})
        lhs = mono(cr, str(i), str(j), str(k), f"{l}{p}")
        rhs = mono(cr, "0", f"{i}{j}", f"{i}{k}", f"{j}{k}")
        assert kernel_membership(cr, lhs - rhs)
        count += 1
    for i in verts:
        others = sorted(verts - {i})
        lhs = mono(cr, str(i), str(i), *map(str, others))
        rhs = mono(cr, "0", "0", *(f"{min(i, o)}{max(i, o)}" for o in others))
        assert kernel_membership(cr, lhs - rhs)
        count += 1
    assert count == 15


def test_p3_principal():
    for ideal in (cut_ideal_lattice(path(3)), cut_ideal_elimination(path(3))):
        assert len(ideal.gb) == 1
        cr = ideal.cut_ring
        f = mono(cr, "0", "2") - mono(cr, "1", "12")
        assert ideal.contains(f)
        assert ideal.gb[0] in (f, -f)


def test_c4_contains_quadric():
    ideal = cut_ideal_lattice(cycle(4))
    cr = ideal.cut_ring
    assert ideal.contains(mono(cr, "0", "13") - mono(cr, "1", "3"))


def test_k4_principal_degree_four():
    ideal = cut_ideal_lattice(complete(4))
    cr = ideal.cut_ring
    f = mono(cr, "1", "2", "3", "4") - mono(cr, "0", "12", "13", "14")
    assert len(ideal.gb) == 1 and ideal.gb[0].degree() == 4
    assert ideal.gb[0] in (f, -f)


def test_zero_ideals():
    for s in ("K2", "K3"):
        assert cut_ideal_lattice(parse_graph(s)).is_zero()
        assert cut_ideal_elimination(parse_graph(s)).is_zero()


@pytest.mark.parametrize("name", [name for name, g in catalog(4)] + ["C5", "G2"])
def test_hilbert_function_matches_sumset_count(name):
    g = parse_graph(name)
    ideal = cut_ideal_lattice(g)
    assert check_homogeneity(ideal)
    hf = oracles.hilbert_function(g.n, g.edges, 4)
    for k in range(5):
        assert len(standard_monomials(ideal.gb, k, ideal.ring.n)) == hf[k]


@pytest.mark.parametrize("name", ["P4", "C4", "K4-e", "K2#K1#K3", "2K2", "C5"])
def test_minimal_generators_two_routes(name):
    ideal = cut_ideal_lattice(parse_graph(name))
    top = max(g.degree() for g in ideal.gb)
    assert minimal_generators(ideal) == fiber_minimal_generators(ideal.cut_ring, top)


def test_generators_share_no_variable():
    # toric ideals are prime: no basis binomial has a common factor
    for name, g in catalog(4):
        assert not shares_variable(cut_ideal_lattice(g)), name


def test_size_guard():
    with pytest.raises(SizeGuardError):
        cut_ideal_lattice(complete(4), max_vars=4)
    with pytest.raises(SizeGuardError):
        cut_ideal_elimination(complete(5))
