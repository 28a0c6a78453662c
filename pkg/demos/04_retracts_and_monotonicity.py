"""Combinatorial retracts and the behaviour of Betti numbers under them.

Deleting a vertex, contracting an edge, or restricting to a neighbourhood
minor gives an algebra retract, so Betti numbers can only drop. Deleting
an edge is not such a move: the 4-cycle has a smaller projective
dimension than the path P4 obtained from it.
"""
from cutalg.catalog import parse_graph
from cutalg.classify import (check_betti_monotonicity, check_neighborhood_retract, deletion_counterexample,
                             identification_non_retract, retract_moves_of)
from cutalg.minors import neighborhood_minors

if __name__ == "__main__":
    g = parse_graph("K2#K1#K3")
    for move in retract_moves_of(g):
        print(check_betti_monotonicity(g, move).line())
    print()
    for w, _ in neighborhood_minors(g):
        if len(w) >= 3:
            print(check_neighborhood_retract(g, w).line())
    print()
    print(deletion_counterexample().line())
    print(identification_non_retract().line())
