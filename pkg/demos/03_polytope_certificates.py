"""Cut polytopes: facets, f-vectors and two combinatorial certificates."""
from cutalg.catalog import parse_graph
from cutalg.polytope import (contraction_face_map, cut_polytope, double_description, f_vector,
                             ohsugi_counterexample_certificate)

if __name__ == "__main__":
    for spec in ("P3", "K3", "C4", "K4"):
        p = cut_polytope(parse_graph(spec))
        h = double_description(p)
        print(f"Cut({spec}): {len(p.vertices)} vertices, {len(h.inequalities)} facets, f-vector {f_vector(p, h)}")
    print()

    # Cut(P3) is a square, but no 2-face of Cut(C4) has four vertices.
    print(ohsugi_counterexample_certificate().text())
    print()

    # Contracting an edge of G gives a face of Cut(G) up to a coordinate
    # arrangement that duplicates the edges to the common neighbours.
    g = parse_graph("K4-e")
    for e in g.edges:
        print(contraction_face_map(g, e).summary())
