from fractions import Fraction

import pytest

from cutalg.catalog import complete, cycle, parse_graph, path
from cutalg.classify import catalog
from cutalg.polytope import (HPolytope, PolytopeError, PolytopeSizeError, VPolytope, contraction_face_map,
                             cut_polytope, dimension, double_description, euler_check, f_vector, face_lattice,
                             h_to_v, ohsugi_counterexample_certificate, vertex_reduce)

import oracles


def test_square():
    p = cut_polytope(path(3))
    assert set(p.vertices) == {(0, 0), (1, 1), (0, 1), (1, 0)}
    assert dimension(p) == 2
    assert len(double_description(p).inequalities) == 4


def test_c4_polytope():
    p = cut_polytope(cycle(4))
    lat = face_lattice(p)
    assert dimension(p) == 4 and len(p) == 8
    assert lat.f_vector() == (8, 24, 32, 16)
    assert all(len(f) == 3 for f in lat.of_dim(2))
    assert euler_check(lat.f_vector())


@pytest.mark.parametrize("name", [name for name, g in catalog(4) if g.m >= 2 and not g.isolated_vertices()]
                         + ["C5", "K2#K1#K4"])
def test_facets_against_qhull(name):
    p = cut_polytope(parse_graph(name))
    assert dimension(p) == p.dim_ambient
    h = double_description(p)
    assert len(h.inequalities) == oracles.facet_count_scipy(p.vertices)
    assert all(h.satisfied(v) for v in p.vertices)
    assert set(h_to_v(h).vertices) == set(p.vertices)


def test_h_to_v_fractions():
    h = HPolytope(2, (((-1, 0), 0), ((0, -1), 0), ((2, 1), 1), ((1, 2), 1)))
    verts = set(h_to_v(h).vertices)
    assert (Fraction(1, 3), Fraction(1, 3)) in verts and len(verts) == 4
    assert vertex_reduce([(0, 0), (Fraction(1, 4), 0)], h) == [(0, 0)]


def test_euler_on_k4():
    fv = f_vector(cut_polytope(complete(4)))
    assert euler_check(fv) and fv[0] == 8


def test_errors():
    with pytest.raises(PolytopeError):
        cut_polytope(parse_graph("n=3"))
    with pytest.raises(PolytopeError):
        double_description(VPolytope(2, ((0, 0), (1, 1))))
    with pytest.raises(PolytopeSizeError):
        double_description(cut_polytope(complete(5)), max_dim=5)
    with pytest.raises(PolytopeError):
        VPolytope(1, ((0,), (0,)))


def test_face_map_small():
    r = contraction_face_map(path(3), (1, 2))
    assert r.passed and r.face_vertices == 2
    r = contraction_face_map(complete(4), (1, 2))
    assert r.passed and r.common_neighbors == (3, 4)


def test_ohsugi_certificate():
    cert = ohsugi_counterexample_certificate()
    assert cert.not_a_face
    assert cert.square_vertices == 4 and cert.two_faces == 32
    assert set(cert.two_face_vertex_counts) == {3}
    assert cert.to_json()["verdict"] == "not-a-face"


def test_vertex_count_bound_over_catalog():
    # a full-dimensional polytope in R^|E| has at least |E| + 1 vertices
    for name, g in catalog(5):
        if not g.m:
            continue
        p = cut_polytope(g)
        assert dimension(p) == g.m, name
        assert len(p.vertices) >= g.m + 1, name
