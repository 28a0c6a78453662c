"""Command-line front end: ``cutalg <command> [options]``.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 size guard,
4 timeout, 130 interrupted.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from importlib import resources

from . import __version__
from .betti import BettiTable, cm_regularity, graded_betti
from .catalog import parse_graph
from .classify import (SECONDARY_PRIME, check_betti_monotonicity, check_complete_intersection, check_dimension_formulas,
                       check_ideal_zero, check_linear_forms, check_linear_resolution, check_n1,
                       check_neighborhood_retract, check_projdim_formula, check_single_degree,
                       check_unicyclic_reg_bounds, format_table1, graph_name, retract_moves_of, table1,
                       unicyclic_cycle_length)
from .cutideal import MAX_LATTICE_VARS, CutRing, SizeGuardError, cut_ideal, minimal_generators
from .graphs import Graph, GraphError
from .minors import combinatorial_retracts, has_minor, is_crf, neighborhood_minors
from .poly import DEFAULT_PRIME, format_polynomial, is_prime
from .polytope import (MAX_DD_DIM, PolytopeSizeError, contraction_face_map, cut_polytope, dimension, double_description,
                       face_lattice, ohsugi_counterexample_certificate)

SCHEMA = 1
EXIT_FAIL, EXIT_PARSE, EXIT_GUARD, EXIT_TIMEOUT, EXIT_INTERRUPT = 1, 2, 3, 4, 130
# rings with more variables than this get only the first two Betti columns without --slow
FULL_BETTI_VARS = 8


class CommandTimeout(Exception):
    pass


@dataclass
class Config:
    prime: int = DEFAULT_PRIME
    check_prime: int | None = None
    fmt: str = "text"
    timeout: float | None = None
    slow: bool = False
    seed: int = 0
    max_vars: int = MAX_LATTICE_VARS
    max_dim: int = MAX_DD_DIM

    def validate(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"--prime {self.prime} is not prime")
        if self.check_prime is not None:
            if not is_prime(self.check_prime):
                raise ValueError(f"--check-prime {self.check_prime} is not prime")
            if self.check_prime == self.prime:
                raise ValueError("--check-prime must differ from --prime")
        if self.max_vars < 1 or self.max_dim < 1:
            raise ValueError("size guards must be positive")
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError("--timeout must be positive")


def output_schema(command: str) -> dict:
    """JSON Schema shipped for the ``--format json`` output of a subcommand."""
    ref = resources.files("cutalg") / "schemas" / f"{command}.json"
    return json.loads(ref.read_text(encoding="utf-8"))


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(cfg: Config, payload: dict, text: str) -> None:
    if cfg.fmt == "json":
        print(json.dumps(dict(payload, schema=SCHEMA), indent=2, sort_keys=True))
    else:
        print(text)


@contextmanager
def _deadline(seconds: float | None):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def fire(signum, frame):
        raise CommandTimeout(f"exceeded {seconds:g} s")

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _graph(spec: str) -> Graph:
    return parse_graph(spec)


def _ideal(g: Graph, cfg: Config, prime: int | None = None, method: str = "lattice"):
    cr = CutRing(g, prime or cfg.prime)
    if cr.nvars > cfg.max_vars:
        raise SizeGuardError(f"{cr.nvars} ring variables exceed the guard {cfg.max_vars}")
    return cut_ideal(cr, method=method)


# ---------------------------------------------------------------------------
# commands


def cmd_ideal(args, cfg: Config) -> int:
    g = _graph(args.graph)
    ideal = _ideal(g, cfg, method=args.method)
    gens = dict(sorted(minimal_generators(ideal).items()))
    height = ideal.height()
    formula = 2 ** (g.n - 1) - g.m - 1
    basis = [format_polynomial(f) for f in ideal.normalized()]
    payload = {"command": "ideal", "graph": args.graph, "n": g.n, "edges": g.m, "p": cfg.prime,
               "method": args.method, "variables": list(ideal.ring.names), "zero": ideal.is_zero(),
               "groebner_basis": basis, "minimal_generators": {str(k): v for k, v in gens.items()},
               "number_of_generators": sum(gens.values()), "height": height, "height_formula": formula,
               "krull_dimension": ideal.krull_dimension()}
    status = 0
    if cfg.check_prime:
        other = _ideal(g, cfg, cfg.check_prime, args.method)
        other_gens = dict(sorted(minimal_generators(other).items()))
        same = other_gens == gens and [format_polynomial(f) for f in other.normalized()] == basis
        payload["check_prime"] = {"p": cfg.check_prime, "agree": same}
        status = 0 if same else EXIT_FAIL
    lines = [f"graph: {args.graph} (n={g.n}, |E|={g.m})",
             f"ring: {ideal.ring.n} variables over GF({cfg.prime})"]
    if ideal.is_zero():
        lines.append("ideal: zero")
    else:
        lines.append(f"reduced Groebner basis ({len(basis)} elements):")
        lines += [f"  {b}" for b in basis]
    lines.append("minimal generators by degree: "
                 + (", ".join(f"{k}: {v}" for k, v in gens.items()) if gens else "none"))
    lines.append(f"height: {height} (formula {formula}, {'ok' if height == formula else 'MISMATCH'})")
    lines.append(f"krull dimension: {ideal.krull_dimension()}")
    if "check_prime" in payload:
        lines.append(f"check prime {cfg.check_prime}: {'agree' if payload['check_prime']['agree'] else 'DISAGREE'}")
    _emit(cfg, payload, "\n".join(lines))
    if height != formula:
        status = EXIT_FAIL
    return status


def _betti(g: Graph, cfg: Config, prime: int, method: str) -> BettiTable:
    ideal = _ideal(g, cfg, prime)
    i_max = None
    if ideal.ring.n > FULL_BETTI_VARS and not cfg.slow:
        i_max = 1
    return graded_betti(ideal, method=method, seed=cfg.seed, i_max=i_max)


def cmd_betti(args, cfg: Config) -> int:
    g = _graph(args.graph)
    t = _betti(g, cfg, cfg.prime, args.method)
    payload = dict(t.to_json(args.graph), command="betti", method=t.method, cohen_macaulay=t.cohen_macaulay)
    lines = [f"graph: {args.graph}  p={cfg.prime}  method={t.method}", t.diagram()]
    lines.append(f"totals (S/I): {' '.join(map(str, t.totals(quotient=True)))}")
    if t.truncated:
        lines.append("truncated: homological degrees above 1 (of I) not computed; use --slow for the full table")
        if t.cohen_macaulay:
            ideal = _ideal(g, cfg)
            reg = cm_regularity(ideal, cfg.seed)
            payload["cm_projdim"], payload["cm_reg"] = ideal.height() - 1, reg
            lines.append(f"from the certified h-vector: projdim(I) = {ideal.height() - 1}  reg(I) = {reg}")
    else:
        lines.append(f"projdim(I) = {t.projdim}  reg(I) = {t.regularity}")
    status = 0
    if cfg.check_prime:
        other = _betti(g, cfg, cfg.check_prime, args.method)
        same = other.nonzero() == t.nonzero()
        payload["check_prime"] = {"p": cfg.check_prime, "agree": same}
        lines.append(f"check prime {cfg.check_prime}: {'agree' if same else 'DISAGREE'}")
        status = 0 if same else EXIT_FAIL
    _emit(cfg, payload, "\n".join(lines))
    return status


def cmd_polytope(args, cfg: Config) -> int:
    g = _graph(args.graph)
    p = cut_polytope(g)
    h = double_description(p, max_dim=cfg.max_dim)
    lattice = face_lattice(p, h)
    fv = lattice.f_vector()
    two = lattice.of_dim(2) if dimension(p) >= 2 else []
    shapes: dict[int, int] = {}
    for f in two:
        shapes[len(f)] = shapes.get(len(f), 0) + 1
    payload = dict(p.to_json(h), command="polytope", graph=args.graph, n_vertices=len(p), n_facets=len(h.inequalities),
                   f_vector=list(fv), two_face_sizes={str(k): v for k, v in sorted(shapes.items())},
                   all_two_faces_triangles=bool(two) and set(shapes) == {3})
    lines = [f"graph: {args.graph}", f"ambient dimension: {p.dim_ambient}", f"dimension: {dimension(p)}",
             f"vertices: {len(p)}", f"facets: {len(h.inequalities)}", f"f-vector: {' '.join(map(str, fv))}"]
    if two:
        lines.append("2-faces by vertex count: " + ", ".join(f"{k}: {v}" for k, v in sorted(shapes.items())))
    if args.facets:
        lines.append("facets (a . x <= b):")
        lines += [f"  {list(a)} <= {b}" for a, b in h.inequalities]
    _emit(cfg, payload, "\n".join(lines))
    return 0


def cmd_retracts(args, cfg: Config) -> int:
    g = _graph(args.graph)
    classes = combinatorial_retracts(g)
    names = sorted((graph_name(x) for x in classes.values()), key=lambda s: (len(s), s))
    nminors = [(sorted(w), v) for w, v in neighborhood_minors(g)]
    k4 = parse_graph("K4")
    crf = is_crf(g, [parse_graph(s) for s in ("K4", "K4-e", "C4")])
    has_k4 = has_minor(g, k4) if g.n <= 8 else None
    payload = {"command": "retracts", "graph": args.graph, "retracts": names,
               "neighborhood_minors": [{"W": w, "witness": v} for w, v in nminors],
               "crf_K4_K4-e_C4": crf, "k4_minor": has_k4}
    lines = [f"graph: {args.graph}", f"combinatorial retracts ({len(names)}): {', '.join(names)}",
             f"neighborhood-minors: {len(nminors)}"]
    lines += [f"  W={{{','.join(map(str, w))}}} witness {v}" for w, v in nminors]
    lines.append(f"free of K4, K4-e, C4 retracts: {'yes' if crf else 'no'}")
    lines.append(f"K4 minor: {'yes' if has_k4 else 'no'}")
    _emit(cfg, payload, "\n".join(lines))
    return 0


def cmd_classify(args, cfg: Config) -> int:
    g = _graph(args.graph)
    if not g.m:
        raise GraphError("classification needs at least one edge")
    name = args.graph
    p = cfg.prime
    nvars = 2 ** (g.n - 1)
    if nvars > cfg.max_vars:
        raise SizeGuardError(f"{nvars} ring variables exceed the guard {cfg.max_vars}")
    full = nvars <= FULL_BETTI_VARS or cfg.slow
    reports = [check_ideal_zero(g, name, p), check_linear_forms(g, name, p), check_dimension_formulas(g, name, p)]
    complete_big = g.n >= 5 and g.m == g.n * (g.n - 1) // 2
    if not complete_big or cfg.slow:
        reports += [check_complete_intersection(g, name, p), check_single_degree(g, name, p)]
    if not complete_big:
        reports.append(check_n1(g, name, p))
    if not complete_big:
        if g.is_connected():
            reports.append(check_linear_resolution(g, name, p))
        if unicyclic_cycle_length(g) is not None and not check_ideal_zero(g, name, p).computed:
            reports.append(check_unicyclic_reg_bounds(g, name, p))
    if full and not complete_big:
        reports.append(check_projdim_formula(g, name, p))
        for move in retract_moves_of(g):
            reports.append(check_betti_monotonicity(g, move, name, p))
    if g.n <= 5:
        for w, _ in neighborhood_minors(g):
            reports.append(check_neighborhood_retract(g, w, name, p))
    payload = {"command": "classify", "graph": name, "p": p, "reports": [r.to_json() for r in reports],
               "all_agree": all(r.agree for r in reports)}
    _emit(cfg, payload, "\n".join(r.line() for r in reports))
    return 0 if payload["all_agree"] else EXIT_FAIL


def cmd_table1(args, cfg: Config) -> int:
    collected = []

    def progress(row):
        collected.append(row)
        _log(f"[table1] {row.name}: {row.status} in {row.seconds:.1f} s")

    timeout = cfg.timeout if cfg.timeout is not None else 300.0
    try:
        rows = table1(args.max_n, slow=cfg.slow, prime=cfg.prime, timeout=timeout, check_prime=cfg.check_prime,
                      seed=cfg.seed, workers=args.workers, progress=progress)
        truncated = False
    except KeyboardInterrupt:
        order = {name: k for k, name in enumerate(r.name for r in collected)}
        rows = sorted(collected, key=lambda r: order[r.name])
        truncated = True
    payload = {"command": "table1", "max_n": args.max_n, "slow": cfg.slow, "p": cfg.prime, "truncated": truncated,
               "rows": [r.to_json() for r in rows], "diffs": sum(len(r.diffs()) for r in rows)}
    text = format_table1(rows)
    if truncated:
        text += "\ntruncated: interrupted"
    _emit(cfg, payload, text)
    return EXIT_INTERRUPT if truncated else 0


def _edge(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split("-"))
    except ValueError:
        raise GraphError(f"bad edge {text!r}; expected like 1-2") from None
    return a, b


def cmd_certify(args, cfg: Config) -> int:
    if args.what == "ohsugi":
        cert = ohsugi_counterexample_certificate()
        _emit(cfg, dict(cert.to_json(), command="certify", certificate="ohsugi"), cert.text())
        return 0 if cert.not_a_face else EXIT_FAIL
    if not args.graph or not args.edge:
        raise GraphError("face-map needs a graph and --edge")
    g = _graph(args.graph)
    e = _edge(args.edge)
    if not g.has_edge(*e):
        raise GraphError(f"{args.edge} is not an edge of {args.graph}")
    rep = contraction_face_map(g, e)
    payload = {"command": "certify", "certificate": "face-map", "graph": args.graph, "edge": list(e),
               "contracted": graph_name(rep.contracted), "common_neighbors": list(rep.common_neighbors),
               "face_vertices": rep.face_vertices, "image_vertices": rep.image_vertices, "is_face": rep.is_face,
               "bijective": rep.bijective, "injective_linear": rep.injective_linear, "passed": rep.passed}
    _emit(cfg, payload, rep.summary())
    return 0 if rep.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--prime", type=int, default=d(DEFAULT_PRIME), help="field characteristic (default 32003)")
    parser.add_argument("--check-prime", type=int, nargs="?", const=SECONDARY_PRIME, default=d(None),
                        help=f"recompute at a second prime and compare (default {SECONDARY_PRIME})")
    parser.add_argument("--format", dest="fmt", choices=["text", "json"], default=d("text"))
    parser.add_argument("--timeout", type=float, default=d(None),
                        help="seconds; per row for table1 (default 300), whole command otherwise")
    parser.add_argument("--slow", action="store_true", default=d(False),
                        help="allow the expensive paths (full Betti tables on 16 variables, K5)")
    parser.add_argument("--seed", type=int, default=d(0), help="seed of the random linear forms")
    parser.add_argument("--max-vars", type=int, default=d(MAX_LATTICE_VARS), help="ring size guard")
    parser.add_argument("--max-dim", type=int, default=d(MAX_DD_DIM), help="polytope dimension guard")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cutalg", description="Cut ideals, Betti tables and cut polytopes of small graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _common(parser, False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        _common(sp, True)
        return sp

    sp = add("ideal", "reduced Groebner basis and minimal generators of the cut ideal")
    sp.add_argument("graph")
    sp.add_argument("--method", choices=["lattice", "elimination"], default="lattice")
    sp.set_defaults(func=cmd_ideal)

    sp = add("betti", "graded Betti diagram of S/I")
    sp.add_argument("graph")
    sp.add_argument("--method", choices=["auto", "artinian", "multigraded"], default="auto")
    sp.set_defaults(func=cmd_betti)

    sp = add("polytope", "vertices, facets and face counts of the cut polytope")
    sp.add_argument("graph")
    sp.add_argument("--facets", action="store_true", help="list the facet inequalities")
    sp.set_defaults(func=cmd_polytope)

    sp = add("retracts", "combinatorial retracts and neighborhood-minors")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_retracts)

    sp = add("classify", "run every applicable classification check on one graph")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_classify)

    sp = add("table1", "recompute the small-graph invariant table and diff it")
    sp.add_argument("--max-n", type=int, default=4, choices=[3, 4, 5])
    sp.add_argument("--workers", type=int, default=1, help="rows computed in parallel")
    sp.set_defaults(func=cmd_table1)

    sp = add("certify", "geometric certificates")
    sp.add_argument("what", choices=["ohsugi", "face-map"])
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--edge", help="edge to contract, like 1-2")
    sp.set_defaults(func=cmd_certify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = Config(prime=args.prime, check_prime=args.check_prime, fmt=args.fmt, timeout=args.timeout,
                 slow=args.slow, seed=args.seed, max_vars=args.max_vars, max_dim=args.max_dim)
    try:
        cfg.validate()
        if args.command == "table1":
            return args.func(args, cfg)
        with _deadline(cfg.timeout):
            return args.func(args, cfg)
    except (SizeGuardError, PolytopeSizeError) as exc:
        _log(f"cutalg: size guard: {exc}")
        return EXIT_GUARD
    except (GraphError, ValueError) as exc:
        _log(f"cutalg: error: {exc}")
        return EXIT_PARSE
    except RuntimeError as exc:
        _log(f"cutalg: {exc}")
        return EXIT_FAIL
    except CommandTimeout as exc:
        _log(f"cutalg: timeout: {exc}")
        return EXIT_TIMEOUT
    except KeyboardInterrupt:
        _log("cutalg: interrupted")
        return EXIT_INTERRUPT


if __name__ == "__main__":
    sys.exit(main())
