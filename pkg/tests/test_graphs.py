import pytest

from cutalg.catalog import complete, cycle, named_graph, parse_graph, path, star
from cutalg.classify import catalog
from cutalg.graphs import (Graph, GraphError, Partition, canonical_form, clique_sum, contract_edge, cut_set,
                           cut_vector, delete_edge, duplicate_vertex, enumerate_partitions,
                           identify_vertices, induced_subgraph, is_isomorphic, is_neighborhood_minor, relabel)

import oracles


def test_edges_sorted_and_validated():
    g = Graph.from_edges(3, [(3, 2), (2, 1), (1, 2)])
    assert g.edges == ((1, 2), (2, 3))
    with pytest.raises(GraphError):
        Graph(3, ((2, 3), (1, 2)))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, ((1, 3),))


def test_partition_canonical_side():
    assert Partition.from_set(3, [1]).members == (2, 3)
    assert Partition.from_set(3, []).label == "0"
    with pytest.raises(GraphError):
        Partition(3, 1)
    assert len(enumerate_partitions(5)) == 16


def test_cut_set_p3():
    g = path(3)
    assert cut_set(g, Partition.from_set(3, [2])) == {(1, 2), (2, 3)}
    assert cut_vector(g, Partition.from_set(3, [])) == (0, 0)


def test_contract_and_identify():
    assert contract_edge(path(3), (1, 2))[0] == complete(2)
    g, mapping = identify_vertices(path(3), 1, 3)
    assert g == complete(2) and mapping == {1: 1, 2: 2, 3: 1}
    c4, _ = contract_edge(cycle(4), (1, 2))
    assert is_isomorphic(c4, complete(3))
    assert delete_edge(cycle(4), (1, 4)) == path(4)
    with pytest.raises(GraphError):
        contract_edge(path(3), (1, 3))


def test_duplicate_vertex():
    assert is_isomorphic(duplicate_vertex(complete(2), 1), path(3))
    assert is_isomorphic(duplicate_vertex(path(3), 1), star(3))


def test_h_sum_attachments_differ():
    # gluing P3 to a triangle by an end vertex or by its middle vertex
    k3, p3 = complete(3), path(3)
    by_end = clique_sum(k3, p3, {1: 1})
    by_middle = clique_sum(k3, p3, {2: 1})
    assert not is_isomorphic(by_end, by_middle)
    assert is_isomorphic(by_end, named_graph("G2"))
    assert is_isomorphic(by_middle, named_graph("G4"))
    assert not is_isomorphic(named_graph("G3"), named_graph("G4"))


def test_neighborhood_minor_c4():
    assert is_neighborhood_minor(cycle(4), [1, 2, 3]) == 2
    assert induced_subgraph(cycle(4), [1, 2, 3]) == path(3)


def test_dsl():
    assert parse_graph(" n=4 ; 1-2 , 2-3 ") == Graph(4, ((1, 2), (2, 3)))
    assert parse_graph("K2#K1#K3").m == 4
    assert parse_graph("K2+P3").n == 5
    assert parse_graph("K3#K2#K4").m == 8
    for bad in ["", "Q7", "n=3; 1-4", "K3#K1"]:
        with pytest.raises(GraphError):
            parse_graph(bad)


def test_figure_graph_edge_counts():
    # |E| column of the reference table
    expected = {"G1": 4, "G2": 5, "G3": 5, "G4": 5, "G5": 6, "G6": 6, "G7": 7, "G8": 7, "G9": 7, "G10": 8}
    assert {k: named_graph(k).m for k in expected} == expected


def test_canonical_form_matches_networkx():
    gs = [g for _, g in catalog(5)]
    for a in gs:
        for b in gs:
            if a.n == b.n and a.m == b.m:
                same = canonical_form(a) == canonical_form(b)
                assert same == oracles.isomorphic(a.n, a.edges, b.n, b.edges)


def test_catalog_counts_match_bruteforce():
    by_n = {}
    for _, g in catalog(5):
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == {n: oracles.iso_class_count(n) for n in (2, 3, 4, 5)}


def test_relabel_preserves_class():
    g = named_graph("G9")
    assert is_isomorphic(relabel(g, [5, 3, 1, 2, 4]), g)
