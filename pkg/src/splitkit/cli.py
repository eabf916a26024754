"""Command-line surface: deterministic JSON reports over the library.

Exit codes: 0 = success/pass, 1 = the mathematics says no (a failed
check is still a valid result), 2 = bad input or usage.
"""

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .dualalg import vertex_algebra_presentation, discrepancy_lhs_table, vertex_hilbert, numerical_koszul_check
from .errors import (
    DegreeMismatch,
    ParseError,
    GenericityFailure,
    HypothesisViolation,
    NegativeDimension,
    NegativeDiscrepancy,
    NonzeroRemainder,
    SizeLimit,
    SplitkitError,
    ValidationError,
)
from .exactlinalg import RATIONALS, DenseMatrix, parse_field
from .laygraph import (
    LayeredGraph,
    SimplicialComplex,
    boolean_graph,
    complex_graph,
    hat,
    is_codim1_connected,
    is_pure,
    is_uniform,
    subspace_graph,
    validate,
)
from .mobius import graded_mobius, hilbert_series, hilbert_series_inverse
from .ncfactor import RootSystem, check_all_orderings, genericity_check
from .seriespoly import coeffs_as_strings
from .topo import betti, discrepancy_rhs_table, euler_characteristic, predict_koszulity

_MATH_ERRORS = (
    GenericityFailure,
    HypothesisViolation,
    NegativeDimension,
    NegativeDiscrepancy,
    NonzeroRemainder,
    DegreeMismatch,
)

_CONVENTION_FLAGS = {
    "calibrated": "calibrated",
    "reduced-min": "reduced-min",
    "reduced-proper": "reduced-proper",
    "unreduced-min": "unreduced-min",
}


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, ensure_ascii=False).encode()).hexdigest()[:16]


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ValidationError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON in {path} (line {exc.lineno}, column {exc.colno})") from exc


def _add_graph_source(parser: argparse.ArgumentParser):
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--boolean", type=int, metavar="N", help="subset-lattice graph on {1..N}")
    src.add_argument("--subspace", type=int, nargs=2, metavar=("N", "Q"), help="subspace lattice of GF(Q)^N")
    src.add_argument("--complex", metavar="FILE", help="simplicial complex JSON; its face-poset graph is used")
    src.add_argument("--graph", metavar="FILE", help="layered graph JSON")
    parser.add_argument("--hat", action="store_true", help="add one maximal vertex on top")


def _build_graph(args) -> tuple:
    """(graph, complex-or-None, input description dict)"""
    x = None
    if args.boolean is not None:
        g = boolean_graph(args.boolean)
        desc = {"source": "boolean", "n": args.boolean}
    elif args.subspace is not None:
        n, q = args.subspace
        g = subspace_graph(n, q)
        desc = {"source": "subspace", "n": n, "q": q}
    elif args.complex is not None:
        data = _load_json(args.complex)
        x = SimplicialComplex.from_json_dict(data)
        g = complex_graph(x)
        desc = {"source": "complex", "facets": x.to_json_dict()["facets"]}
    else:
        data = _load_json(args.graph)
        g = LayeredGraph.from_json_dict(data)
        desc = {"source": "graph", "graph": g.to_json_dict()}
    if args.hat:
        g = hat(g)
        desc["hat"] = True
    desc["digest"] = _digest(desc)
    return g, x, desc


def _report(args, command: str, inputs: dict, payload: dict, started: float) -> dict:
    report = {"command": command, "inputs": inputs, "tool": {"name": "splitkit", "version": __version__}}
    report.update(payload)
    if args.timings:
        report["timings"] = {"seconds": round(time.monotonic() - started, 6)}
    return report


def _emit(args, report: dict):
    indent = 2 if args.pretty else None
    print(json.dumps(report, sort_keys=True, ensure_ascii=False, indent=indent))


def _cmd_graph(args, started) -> int:
    g, x, desc = _build_graph(args)
    rep = validate(g)
    payload = {
        "graph": g.to_json_dict(),
        "height": g.height,
        "num_vertices": len(g.vertices),
        "num_edges": len(g.edges),
        "valid": rep.ok,
        "violations": list(rep.violations),
        "uniform": is_uniform(g) if rep.ok else None,
    }
    if x is not None:
        payload["complex"] = {
            "dim": x.dim,
            "f_vector": x.f_vector(),
            "pure": is_pure(x),
            "codim1_connected": is_codim1_connected(x),
        }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(g.to_json_dict(), fh, sort_keys=True, ensure_ascii=False, indent=2)
        payload["written"] = args.out
    _emit(args, _report(args, "graph", desc, payload, started))
    return 0 if rep.ok else 1


def _cmd_mobius(args, started) -> int:
    g, _, desc = _build_graph(args)
    m = graded_mobius(g, strict=args.mobius_strict)
    payload = {
        "graded_mobius": coeffs_as_strings(m),
        "strict_diagonal_dropped": args.mobius_strict,
    }
    _emit(args, _report(args, "mobius", desc, payload, started))
    return 0


def _cmd_hilbert(args, started) -> int:
    g, _, desc = _build_graph(args)
    truncation = args.degree if args.degree is not None else 2 * g.height
    series = hilbert_series(g, truncation, strict=args.mobius_strict)
    inv = hilbert_series_inverse(g, strict=args.mobius_strict, check_degree=False)
    payload = {
        "truncation": truncation,
        "series": coeffs_as_strings(series),
        "inverse_polynomial": coeffs_as_strings(inv),
        "inverse_degree": inv.degree,
        "inverse_degree_equals_height": inv.degree == g.height,
    }
    _emit(args, _report(args, "hilbert", desc, payload, started))
    return 0


def _cmd_dual(args, started) -> int:
    g, _, desc = _build_graph(args)
    field = parse_field(args.field)
    pres = vertex_algebra_presentation(g, field)
    hb = vertex_hilbert(g, field)
    payload = {
        "field": str(field),
        "generators": list(pres.generators),
        "num_relations": len(pres.relations),
        "graded_dims": coeffs_as_strings(hb),
    }
    _emit(args, _report(args, "dual", desc, payload, started))
    return 0


def _cmd_koszul(args, started) -> int:
    g, _, desc = _build_graph(args)
    field = parse_field(args.field)
    verdict = numerical_koszul_check(g, field)
    payload = {
        "field": str(field),
        "pass": verdict.passes,
        "first_divergence_degree": verdict.first_divergence_degree,
        "lhs": coeffs_as_strings(verdict.series_side),
        "rhs": coeffs_as_strings(verdict.algebra_side),
    }
    _emit(args, _report(args, "koszul-check", desc, payload, started))
    return 0 if verdict.passes else 1


def _cmd_discrepancy(args, started) -> int:
    g, _, desc = _build_graph(args)
    field = parse_field(args.field)
    convention = _CONVENTION_FLAGS[args.convention]
    lhs = discrepancy_lhs_table(g, field)
    rhs = discrepancy_rhs_table(g, field, convention, parallel=args.parallel)
    payload = {
        "field": str(field),
        "convention": convention,
        "degrees": list(range(g.height + 1)),
        "algebra_side": lhs,
        "topology_side": rhs,
        "sides_agree": lhs == rhs,
        "nonzero_degrees": [k for k, v in enumerate(lhs) if v],
    }
    _emit(args, _report(args, "discrepancy", desc, payload, started))
    return 0 if lhs == rhs else 1


def _cmd_topology(args, started) -> int:
    data = _load_json(args.complex)
    x = SimplicialComplex.from_json_dict(data)
    field = parse_field(args.field)
    desc = {"source": "complex", "facets": x.to_json_dict()["facets"]}
    desc["digest"] = _digest(desc)
    reduced = betti(x, field, reduced=True)
    unreduced = betti(x, field, reduced=False)
    payload = {
        "field": str(field),
        "dim": x.dim,
        "f_vector": x.f_vector(),
        "euler_characteristic": euler_characteristic(x),
        "betti_reduced": list(reduced.b),
        "betti_unreduced": list(unreduced.b),
        "pure": is_pure(x),
        "codim1_connected": is_codim1_connected(x),
    }
    try:
        verdict = predict_koszulity(x, field)
    except HypothesisViolation as exc:
        payload["koszulity_prediction"] = {"hypothesis_violation": str(exc)}
        _emit(args, _report(args, "topology", desc, payload, started))
        return 1
    payload["koszulity_prediction"] = {
        "pass": verdict.passes,
        "low_homology_vanishes": verdict.low_homology_vanishes,
        "local_homology_ok": verdict.local_homology_ok,
        "top_dimension": verdict.n,
    }
    _emit(args, _report(args, "topology", desc, payload, started))
    return 0 if verdict.passes else 1


def _parse_roots(data) -> RootSystem:
    try:
        d = int(data["d"])
        mats = data["roots"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad roots JSON: {exc}") from exc
    matrices = []
    for m in mats:
        if len(m) != d or any(len(r) != d for r in m):
            raise ValidationError(f"root matrices must be {d}x{d}")
        matrices.append(DenseMatrix([[Fraction(str(v)) for v in row] for row in m], RATIONALS))
    return RootSystem(tuple(matrices))


def _cmd_factor(args, started) -> int:
    data = _load_json(args.roots)
    rs = _parse_roots(data)
    desc = {"source": "roots", "d": rs.d, "n": rs.n, "digest": _digest(data)}
    generic = genericity_check(rs)
    payload = {
        "n": rs.n,
        "d": rs.d,
        "generic": generic.generic,
        "singular_vandermondes": [list(s) for s in generic.singular_vandermondes],
        "singular_transforms": [[list(a), i] for a, i in generic.singular_transforms],
    }
    if not generic.generic:
        payload["pass"] = False
        _emit(args, _report(args, "factor", desc, payload, started))
        return 1
    chk = check_all_orderings(rs)

    def render(poly):
        return [[[str(v) for v in row] for row in c.entries] for c in poly.coefficients]

    payload["pass"] = chk.passed
    payload["num_orderings"] = len(chk.orderings)
    payload["coefficients"] = render(chk.polynomial) if chk.passed else None
    payload["mismatched_orderings"] = [list(o) for o in chk.mismatched]
    _emit(args, _report(args, "factor", desc, payload, started))
    return 0 if chk.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitkit",
        description="Exact computations on layered graphs, their algebras, and matrix-polynomial factorizations.",
    )
    parser.add_argument("--version", action="version", version=f"splitkit {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        out = p.add_mutually_exclusive_group()
        out.add_argument("--json", action="store_true", help="compact JSON output (default)")
        out.add_argument("--pretty", action="store_true", help="indented JSON output")
        p.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
        p.add_argument("--parallel", action="store_true", help="parallelize per-vertex work where supported")

    p = sub.add_parser("graph", help="build/validate a layered graph; report uniformity and purity")
    _add_graph_source(p)
    p.add_argument("--out", metavar="FILE", help="also write the graph JSON to a file")
    common(p)
    p.set_defaults(run=_cmd_graph)

    p = sub.add_parser("mobius", help="graded Möbius polynomial of the graph poset")
    _add_graph_source(p)
    p.add_argument("--mobius-strict", action="store_true", help="drop the diagonal from the graded Möbius sum")
    common(p)
    p.set_defaults(run=_cmd_mobius)

    p = sub.add_parser("hilbert", help="Hilbert series of the edge algebra and its inverse polynomial")
    _add_graph_source(p)
    p.add_argument("-D", "--degree", type=int, help="truncation degree (default: 2 x height)")
    p.add_argument("--mobius-strict", action="store_true", help="drop the diagonal from the graded Möbius sum")
    common(p)
    p.set_defaults(run=_cmd_hilbert)

    p = sub.add_parser("dual", help="vertex-algebra presentation and graded dimensions")
    _add_graph_source(p)
    p.add_argument("--field", required=True, help="q or gf<p>")
    common(p)
    p.set_defaults(run=_cmd_dual)

    p = sub.add_parser("koszul-check", help="numerical Koszulity: series side vs algebra side")
    _add_graph_source(p)
    p.add_argument("--field", required=True, help="q or gf<p>")
    common(p)
    p.set_defaults(run=_cmd_koszul)

    p = sub.add_parser("discrepancy", help="degreewise series/algebra discrepancy vs its topological formula")
    _add_graph_source(p)
    p.add_argument("--field", required=True, help="q or gf<p>")
    p.add_argument(
        "--convention",
        choices=sorted(_CONVENTION_FLAGS),
        default="calibrated",
        help="per-vertex summation rule on the topology side",
    )
    common(p)
    p.set_defaults(run=_cmd_discrepancy)

    p = sub.add_parser("topology", help="Betti numbers and the homological Koszulity prediction")
    p.add_argument("--complex", required=True, metavar="FILE", help="simplicial complex JSON")
    p.add_argument("--field", required=True, help="q or gf<p>")
    common(p)
    p.set_defaults(run=_cmd_topology)

    p = sub.add_parser("factor", help="all factorizations of the polynomial with the given matrix roots")
    p.add_argument("roots", metavar="ROOTS_JSON", help='{"d": size, "roots": [[["p/q", ...], ...], ...]}')
    common(p)
    p.set_defaults(run=_cmd_factor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        return args.run(args, started)
    except _MATH_ERRORS as exc:
        print(
            json.dumps(
                {"command": args.cmd, "error": type(exc).__name__, "detail": str(exc)},
                sort_keys=True,
                ensure_ascii=False,
            )
        )
        return 1
    except (ValidationError, SizeLimit, ValueError) as exc:
        print(f"splitkit: {exc}", file=sys.stderr)
        return 2
    except SplitkitError as exc:  # residual library errors are input-level
        print(f"splitkit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
