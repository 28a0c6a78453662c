"""The ten acceptance criteria, each at its stated tolerance and time budget.

Every test prints one ``PASS``/``FAIL`` line (visible even without ``-s``)
before asserting.
"""

import time

import pytest

from cutalg.betti import graded_betti
from cutalg.catalog import parse_graph
from cutalg.classify import (catalog, deletion_counterexample, generators_of, ideal_of, monotonicity_sweep,
                             table1, theorem_sweep)
from cutalg.cutideal import cut_ideal_elimination, cut_ideal_lattice
from cutalg.polytope import contraction_face_map, cut_polytope, dimension, double_description, face_lattice
from cutalg.polytope import ohsugi_counterexample_certificate


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, seconds, detail=""):
        with capsys.disabled():
            word = "PASS" if ok else "FAIL"
            print(f"\n[acceptance {number:2d}] {word} {title} ({seconds:.1f} s) {detail}".rstrip())
        assert ok, detail
    return emit


def _product(cr, labels):
    f = cr.ring.one()
    for a in labels:
        f = f * cr.q(a)
    return f


def test_01_principal_fixtures(report):
    ok, notes, worst = True, [], 0.0
    fixtures = [("P3", 2, ["0", "2"], ["1", "12"]),
                ("K4", 4, ["1", "2", "3", "4"], ["0", "12", "13", "14"])]
    for name, degree, lhs, rhs in fixtures:
        start = time.perf_counter()
        ideal = cut_ideal_lattice(parse_graph(name))
        gens = generators_of(parse_graph(name))
        f = _product(ideal.cut_ring, lhs) - _product(ideal.cut_ring, rhs)
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        good = gens == {degree: 1} and len(ideal.gb) == 1 and ideal.gb[0] in (f, -f) and elapsed < 10
        ok &= good
        notes.append(f"{name}: {ideal.gb[0]}")
    report(1, "principal ideals of P3 and K4", ok, worst, "; ".join(notes))


def test_02_table_small(report):
    start = time.perf_counter()
    rows = table1(4)
    elapsed = time.perf_counter() - start
    diffs = [(r.name, d) for r in rows for d in r.diffs()]
    cols = {"mindeg", "maxdeg", "projdim", "reg", "CI", "N1", "CM"}
    complete = all(cols <= set(r.computed) for r in rows)
    cm = all(r.computed.get("CM") is True for r in rows)
    ok = len(rows) == 8 and not diffs and complete and cm and elapsed < 300
    report(2, "reference rows with n <= 4", ok, elapsed, f"rows={len(rows)} diffs={diffs}")


def test_03_linear_strand(report):
    start = time.perf_counter()
    t = graded_betti(ideal_of(parse_graph("K2#K1#K3")))
    elapsed = time.perf_counter() - start
    totals = t.totals(quotient=True)
    ok = totals == [1, 6, 8, 3] and all(j == i + 2 for i, j in t.nonzero()) and elapsed < 60
    report(3, "K2#K1#K3 Betti diagram", ok, elapsed, f"totals={totals}")


@pytest.mark.slow
def test_04_k5_minus_edge_generators(report):
    start = time.perf_counter()
    gens = generators_of(parse_graph("K5-e"))
    elapsed = time.perf_counter() - start
    ok = gens == {2: 4, 4: 31} and elapsed < 1800
    report(4, "K5-e minimal generators", ok, elapsed, f"by degree={gens}")


def test_05_route_equivalence(report):
    start = time.perf_counter()
    graphs = catalog(4) + [(s, parse_graph(s)) for s in ("P5", "C5", "K1_4")]
    bad = []
    for name, g in graphs:
        a, b = cut_ideal_lattice(g), cut_ideal_elimination(g)
        if [str(x) for x in a.gb] != [str(x) for x in b.gb]:
            bad.append(name)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 600
    report(5, "lattice and elimination bases agree", ok, elapsed, f"graphs={len(graphs)} mismatches={bad}")


def test_06_structural_formulas(report):
    start = time.perf_counter()
    bad = []
    count = 0
    for name, g in catalog(5):
        ideal = ideal_of(g)
        count += 1
        if ideal.krull_dimension() != g.m + 1 or ideal.height() != 2 ** (g.n - 1) - g.m - 1:
            bad.append((name, "dimension"))
        comps = g.components()
        lin = len(ideal.linear_forms())
        if (lin > 0) != (len(comps) > 1):
            bad.append((name, "linear forms"))
        if len(comps) == 2 and lin != 2 ** (len(comps[0]) + len(comps[1]) - 2):
            bad.append((name, "linear count"))
    elapsed = time.perf_counter() - start
    report(6, "dimension, height and linear forms", not bad, elapsed, f"graphs={count} failures={bad}")


def test_07_geometry(report):
    start = time.perf_counter()
    sq = cut_polytope(parse_graph("P3"))
    c4 = cut_polytope(parse_graph("C4"))
    lat = face_lattice(c4)
    two = lat.of_dim(2)
    cert = ohsugi_counterexample_certificate()
    elapsed = time.perf_counter() - start
    ok = (len(sq), len(double_description(sq).inequalities), dimension(sq)) == (4, 4, 2)
    ok &= (dimension(c4), len(c4), len(lat.of_dim(3))) == (4, 8, 16)
    ok &= len(two) == 32 and all(len(f) == 3 for f in two)
    ok &= cert.not_a_face and elapsed < 60
    report(7, "square, C4 polytope and the not-a-face certificate", ok, elapsed,
           f"C4 f-vector={lat.f_vector()} verdict={cert.to_json()['verdict']}")


def test_08_face_maps(report):
    start = time.perf_counter()
    bad, count = [], 0
    for name, g in catalog(5):
        for e in g.edges:
            count += 1
            if not contraction_face_map(g, e).passed:
                bad.append((name, e))
    elapsed = time.perf_counter() - start
    report(8, "contraction face maps", not bad and elapsed < 300, elapsed, f"pairs={count} failures={bad}")


def test_09_monotonicity(report):
    start = time.perf_counter()
    reports = monotonicity_sweep(4)
    elapsed = time.perf_counter() - start
    bad = [r.instance for r in reports if not r.agree]
    deletion = deletion_counterexample()
    ok = not bad and deletion.agree and any(r.theorem == "deletion_not_retract" for r in reports)
    report(9, "Betti monotonicity under retract moves", ok, elapsed,
           f"checks={len(reports)} failures={bad} deletion={deletion.computed}")


def test_10_theorem_sweep(report):
    start = time.perf_counter()
    reports = theorem_sweep()
    elapsed = time.perf_counter() - start
    bad = [r.line() for r in reports if not r.agree]
    kinds = sorted({r.theorem for r in reports})
    report(10, "classification predicates", not bad, elapsed, f"checks={len(reports)} kinds={kinds} failures={bad}")
