"""Principal cut ideals: the path P3, the 4-cycle and K4.

Each of these graphs has a cut ideal generated by a single binomial.
The script prints the ring, the generator and the dimension count.
"""
from cutalg.catalog import parse_graph
from cutalg.cutideal import cut_ideal, minimal_generators


def show(spec: str) -> None:
    g = parse_graph(spec)
    ideal = cut_ideal(g)
    ring = ideal.cut_ring
    print(f"{spec}: {g.n} vertices, {g.m} edges, {ring.nvars} variables")
    print("  variables:", " ".join(ring.ring.names))
    for f in ideal.gb:
        print("  generator:", f)
    print(f"  Krull dimension {ideal.krull_dimension()} = |E| + 1, height {ideal.height()}")
    print("  minimal generators by degree:", minimal_generators(ideal))
    print()


if __name__ == "__main__":
    for spec in ("P3", "C4", "K4"):
        show(spec)
    # Variables name the side of the cut that avoids vertex 1, so the
    # binomial q_0*q_2 - q_3*q_23 of P3 could equally be written in terms
    # of the complementary sides {1,2,3} and {1,3}.
    g = parse_graph("P3")
    ideal = cut_ideal(g)
    cr = ideal.cut_ring
    f = cr.q("123") * cr.q("2") - cr.q("1") * cr.q("12")
    print("q_{123} q_2 - q_1 q_{12} lies in I(P3):", ideal.contains(f))
