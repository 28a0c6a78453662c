from math import comb

import pytest

from cutalg.betti import artinian_reduction, cm_regularity, graded_betti, split_linear_forms
from cutalg.catalog import parse_graph
from cutalg.classify import catalog
from cutalg.cutideal import cut_ideal_lattice

import oracles


def table(name, **kw):
    return graded_betti(cut_ideal_lattice(parse_graph(name)), **kw)


def k_polynomial(t, nvars):
    """Coefficients of sum (-1)^i beta_ij(S/I) t^j."""
    out = {}
    for (i, j), v in t.quotient().items():
        out[j] = out.get(j, 0) + (-1) ** i * v
    return {k: v for k, v in out.items() if v}


def oracle_k_polynomial(g, nvars, dim):
    # h(t) (1 - t)^(nvars - dim); every h-vector met here ends below degree 8
    h = oracles.h_vector(g.n, g.edges, min(nvars, 10))
    out = {}
    for a, ha in enumerate(h):
        for b in range(nvars - dim + 1):
            c = ha * (-1) ** b * comb(nvars - dim, b)
            out[a + b] = out.get(a + b, 0) + c
    return {k: v for k, v in out.items() if v}


def test_k2_k1_k3_linear():
    t = table("K2#K1#K3")
    assert t.totals(quotient=True) == [1, 6, 8, 3]
    assert t.is_linear() and t.regularity == 2 and t.projdim == 2
    assert t.nonzero() == {(0, 2): 6, (1, 3): 8, (2, 4): 3}


def test_principal_tables():
    assert table("P3").nonzero() == {(0, 2): 1}
    assert table("K4").nonzero() == {(0, 4): 1}


def test_c4_koszul():
    assert table("C4").nonzero() == {(0, 2): 3, (1, 4): 3, (2, 6): 1}


def test_disconnected_split():
    ideal = cut_ideal_lattice(parse_graph("2K2"))
    lin, rest = split_linear_forms(ideal.gb)
    assert lin == 4 and len(rest) == 1
    t = graded_betti(ideal)
    assert t.regularity == 2 and t.projdim == 4


@pytest.mark.parametrize("name", [name for name, g in catalog(4) if g.m > 1])
def test_routes_agree_and_match_hilbert(name):
    g = parse_graph(name)
    ideal = cut_ideal_lattice(g)
    a = graded_betti(ideal, method="artinian")
    # every table here ends by degree 6, so truncating the multigraded route at 8 loses nothing
    m = graded_betti(ideal, method="multigraded", j_max=8)
    assert all(j <= 6 for _, j in a.nonzero())
    assert a.nonzero() == m.nonzero()
    if not ideal.is_zero():
        assert k_polynomial(a, ideal.ring.n) == oracle_k_polynomial(g, ideal.ring.n, ideal.krull_dimension())


@pytest.mark.parametrize("name,totals", [
    # frozen from the Artinian route and checked against the sumset Hilbert series below
    ("K2#K1#K4", [33, 144, 294, 336, 210, 76, 23, 3]),
    ("K3#K2#K4", [21, 100, 202, 202, 100, 21, 1]),
])
def test_five_vertex_tables(name, totals):
    g = parse_graph(name)
    ideal = cut_ideal_lattice(g)
    t = graded_betti(ideal, method="artinian")
    assert t.totals() == totals
    assert k_polynomial(t, ideal.ring.n) == oracle_k_polynomial(g, ideal.ring.n, ideal.krull_dimension())
    assert cm_regularity(ideal) == t.regularity


def test_artinian_certificate_is_length():
    ideal = cut_ideal_lattice(parse_graph("C4"))
    red = artinian_reduction(ideal.gb)
    assert red.certified and red.dims[-1] == 0
    assert red.dims[:-1] == oracles.h_vector(4, parse_graph("C4").edges, 10)


def test_truncation_flag():
    t = table("P4", i_max=1)
    assert t.truncated and max(i for i, _ in t.nonzero()) == 1
    assert not table("P4").truncated


def test_diagram_text():
    text = table("K2#K1#K3").diagram()
    assert "total: 1 6 8 3" in text
    assert text.splitlines()[-1] == "    1: . 6 8 3"


def test_zero_ideal():
    assert table("K3").is_zero()
