import json

import pytest

from cutalg.catalog import parse_graph
from cutalg.classify import (TABLE1, catalog, check_complete_intersection, check_dimension_formulas,
                             check_linear_forms, check_linear_resolution, check_n1, check_neighborhood_retract,
                             check_projdim_formula, check_single_degree, check_unicyclic_reg_bounds,
                             deletion_counterexample, format_table1, graph_name, identification_non_retract,
                             neighborhood_retract_maps, reference_row, regularity_of, table1, table1_json)
from cutalg.minors import neighborhood_minors

import oracles


def test_reference_rows_parse_with_matching_edge_counts():
    assert len(TABLE1) == 31
    for r in TABLE1:
        g = parse_graph(r.spec)
        assert g.m == r.edges, r.name
        assert not g.isolated_vertices() or r.name in ("2K2",)
        assert reference_row(g) is r


def test_graph_names():
    assert graph_name(parse_graph("n=4; 1-2,1-3,1-4")) == "K1_3"
    assert graph_name(parse_graph("n=4; 1-2")) == "K2+K1+K1"
    assert len(catalog(5)) == 47


def test_linear_forms_two_components():
    r = check_linear_forms(parse_graph("K2+P3"))
    assert r.agree and r.computed == 8


def test_dimension_and_height():
    for name in ("C5", "K2+K3", "G7"):
        assert check_dimension_formulas(parse_graph(name)).agree


def test_complete_intersections():
    assert check_complete_intersection(parse_graph("K4-e")).computed is True
    assert check_complete_intersection(parse_graph("P4")).computed is False
    assert check_complete_intersection(parse_graph("C4+K1")).agree


def test_single_degree_cases():
    r = check_single_degree(parse_graph("K2#K1#K4"))
    assert r.agree and r.detail["degrees"] == [2, 4]
    assert check_single_degree(parse_graph("K4")).detail["degrees"] == [4]


def test_linear_resolution_and_n1():
    assert check_linear_resolution(parse_graph("K2#K1#K3")).computed is True
    r = check_linear_resolution(parse_graph("C5"))
    assert r.agree and r.detail["route"] == "h-vector"
    assert check_n1(parse_graph("K3#K1#K3")).computed is True
    with pytest.raises(ValueError):
        check_linear_resolution(parse_graph("2K2"))


def test_unicyclic_bounds():
    r = check_unicyclic_reg_bounds(parse_graph("C4"))
    assert r.computed == 4 and r.predicted == [1, 5]
    r = check_unicyclic_reg_bounds(parse_graph("G2"))
    assert r.computed == 3 and r.predicted == [3, 6]
    with pytest.raises(ValueError):
        check_unicyclic_reg_bounds(parse_graph("K3"))


def test_projdim_formula():
    assert check_projdim_formula(parse_graph("K4-e")).agree


@pytest.mark.parametrize("name", ["K3#K2#C4", "K3#K2#K4", "C5", "G7"])
def test_h_vector_regularity_matches_oracle(name):
    g = parse_graph(name)
    h = oracles.h_vector(g.n, g.edges, 9)
    assert regularity_of(g) == len(h)      # deg h + 1


def test_neighborhood_retract_instances():
    g = parse_graph("C4")
    h, v, lam, pi = neighborhood_retract_maps(g, [1, 2, 3])
    assert v == 2 and h == parse_graph("P3")
    assert all(pi[lam[k]] == k for k in range(len(lam)))
    for name in ("C4", "K2#K1#K3", "G6"):
        g = parse_graph(name)
        ws = [w for w, _ in neighborhood_minors(g) if len(w) >= 3]
        assert ws
        for w in ws:
            assert check_neighborhood_retract(g, w, name).agree, (name, sorted(w))


def test_deletion_and_identification():
    r = deletion_counterexample()
    assert r.agree and r.computed == {"projdim C4": 2, "projdim P4": 3}
    r = identification_non_retract()
    assert r.agree and r.computed["result"] == "K4"
    assert r.computed["violations"]


def test_table_small_exact():
    rows = table1(4, timeout=None)
    assert [r.name for r in rows] == ["P3", "2K2", "P4", "K1_3", "K2#K1#K3", "C4", "K4-e", "K4"]
    assert all(not r.diffs() for r in rows)
    text = format_table1(rows)
    assert "cell diffs: 0" in text
    assert json.loads(table1_json(rows)) == json.loads(table1_json(table1(4, timeout=None)))
