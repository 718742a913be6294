"""Command-line front end.

Reads JSON from ``--in`` paths or stdin, writes canonical JSON (or DOT) to
``--out`` or stdout.  Exit codes: 0 success, 2 malformed input, 3 a
mathematical precondition failed, 4 an internal theorem check failed.
"""
from __future__ import annotations

import argparse
import random
import sys
from typing import Any, Callable

from . import jsonio
from .errors import PreconditionError, SchemaError, TheoremViolation
from .exterior import (
    COCHAR,
    boundary,
    dual,
    is_closed_faithful,
    is_torus_polynomial,
)
from .localization import genus_at_one, laurent_check
from .polytope import enumerate_vertices
from .quasitoric import (
    canceling_vertex_pairs,
    check_star,
    connected_sum_pairs,
    product_pairs,
    quasitoric_polynomial,
    torus_graph_of,
)
from .realization import add_pairs, realize_dim1, realize_dim2
from .search import (
    cap_search,
    hexagon_polynomial,
    hexagonal_prism_pairs,
    min_support_search,
    random_hexagon_labels,
)
from .torusgraph import (
    TorusGraph,
    canceling_pairs,
    connected_sum_graphs,
    disjoint_union,
    find_orientation,
    graph_from_polynomial,
    prime_reduce,
    standard_fixture,
    torus_polynomial,
    validate_axial,
)

EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_THEOREM = 2, 3, 4


def emit_dot(g: TorusGraph) -> str:
    """DOT text: one node per vertex with its sign, one edge per dart pair."""
    lines = ["graph torus {"]
    for v, s in g.vertices.items():
        sign = "?" if s is None else f"{s:+d}"
        lines.append(f'  v{v} [label="{v} ({sign})"];')
    for d in g.darts.values():
        e = g.partner(d)
        if d.id < e.id:
            a = ",".join(map(str, d.label))
            b = ",".join(map(str, e.label))
            lines.append(f'  v{d.vertex} -- v{e.vertex} [label="({a}) / ({b})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# input helpers -------------------------------------------------------------

def _read_docs(args) -> list[Any]:
    paths = args.inputs or []
    if paths:
        docs = []
        for p in paths:
            with open(p, encoding="utf-8") as fh:
                docs.append(jsonio.loads(fh.read()))
        return docs
    return [jsonio.loads(sys.stdin.read())]


def _one(args) -> Any:
    docs = _read_docs(args)
    if len(docs) != 1:
        raise SchemaError(f"expected one input document, got {len(docs)}")
    return docs[0]


def _two(args, key: str) -> list[Any]:
    docs = _read_docs(args)
    if len(docs) == 1:
        doc = docs[0]
        if isinstance(doc, dict) and key in doc:
            doc = doc[key]
        if not isinstance(doc, list):
            raise SchemaError(f"expected two inputs: two --in files, a JSON list, or {{\"{key}\": [...]}}")
        docs = doc
    if len(docs) != 2:
        raise SchemaError(f"expected two inputs, got {len(docs)}")
    return docs


# commands ------------------------------------------------------------------

def cmd_validate_graph(args):
    g = jsonio.graph_from_json(_one(args))
    r = validate_axial(g)
    doc = {"ok": r.ok, "reversal": r.reversal, "basis": r.basis,
           "congruence": r.congruence, "connected": r.connected, "failures": r.failures}
    return doc, (0 if r.ok else EXIT_PRECONDITION)


def cmd_orient(args):
    return jsonio.graph_to_json(find_orientation(jsonio.graph_from_json(_one(args))))


def cmd_polynomial(args):
    return jsonio.polynomial_to_json(torus_polynomial(jsonio.graph_from_json(_one(args))))


def cmd_dual(args):
    return jsonio.polynomial_to_json(dual(jsonio.polynomial_from_json(_one(args))))


def cmd_boundary(args):
    return jsonio.polynomial_to_json(boundary(jsonio.polynomial_from_json(_one(args))))


def cmd_check_kn(args):
    return {"member": is_torus_polynomial(jsonio.polynomial_from_json(_one(args)))}


def cmd_check_fkn(args):
    return {"member": is_closed_faithful(jsonio.polynomial_from_json(_one(args)))}


def cmd_from_polynomial(args):
    return jsonio.graph_to_json(graph_from_polynomial(jsonio.polynomial_from_json(_one(args))))


def cmd_prime_reduce(args):
    return jsonio.graph_to_json(prime_reduce(jsonio.graph_from_json(_one(args))))


def _vertices_flag(args):
    return tuple(args.at) if args.at else None


def cmd_connect_graphs(args):
    g1, g2 = (jsonio.graph_from_json(d) for d in _two(args, "graphs"))
    at = _vertices_flag(args)
    if at is None:
        union = disjoint_union(g1, g2)
        shift = max(g1.vertices, default=-1) + 1 - min(g2.vertices, default=0)
        cross = [(p, q - shift) for p, q in canceling_pairs(union)
                 if p in g1.vertices and q - shift in g2.vertices]
        if not cross:
            raise PreconditionError("no vertex of the first graph cancels a vertex of the second")
        at = cross[0]
    return jsonio.graph_to_json(connected_sum_graphs(g1, at[0], g2, at[1]))


def cmd_fixture(args):
    return jsonio.graph_to_json(standard_fixture(args.name, args.rank))


def cmd_vertices(args):
    return jsonio.combinatorial_to_json(enumerate_vertices(jsonio.polytope_from_json(_one(args))))


def cmd_check_star(args):
    return {"star": check_star(jsonio.pair_from_json(_one(args)))}


def cmd_qt_polynomial(args):
    return jsonio.polynomial_to_json(quasitoric_polynomial(jsonio.pair_from_json(_one(args))))


def cmd_graph_of_pair(args):
    return jsonio.graph_to_json(torus_graph_of(jsonio.pair_from_json(_one(args))))


def cmd_product_pairs(args):
    q1, q2 = (jsonio.pair_from_json(d) for d in _two(args, "pairs"))
    return jsonio.pair_to_json(product_pairs(q1, q2))


def cmd_connect_pairs(args):
    q1, q2 = (jsonio.pair_from_json(d) for d in _two(args, "pairs"))
    at = _vertices_flag(args)
    if at is None:
        pairs = canceling_vertex_pairs(q1, q2)
        if not pairs:
            raise PreconditionError("no vertex of the first pair cancels a vertex of the second")
        at = pairs[0]
    return jsonio.pair_to_json(connected_sum_pairs(q1, at[0], q2, at[1]))


def cmd_add_pairs(args):
    q1, q2 = (jsonio.pair_from_json(d) for d in _two(args, "pairs"))
    return jsonio.pair_to_json(add_pairs(q1, q2))


def cmd_realize(args):
    h = jsonio.polynomial_from_json(_one(args))
    if h.side != COCHAR:
        raise PreconditionError("realize takes a cocharacter-side polynomial")
    if args.dim == 1:
        return {"pairs": [jsonio.pair_to_json(q) for q in realize_dim1(h)]}
    return jsonio.pair_to_json(realize_dim2(h))


def _local_source(doc):
    if isinstance(doc, dict) and "side" in doc:
        return jsonio.polynomial_from_json(doc)
    return jsonio.graph_from_json(doc)


def cmd_localize(args):
    cert = laurent_check(_local_source(_one(args)), trials=args.trials, order=args.order, seed=args.seed)
    return cert.to_json()


def cmd_genus(args):
    return {"genus": genus_at_one(_local_source(_one(args)), trials=args.trials, seed=args.seed)}


def cmd_min_support_search(args):
    report = min_support_search(args.n, args.bound)
    return {
        "n": report.n, "bound": report.bound, "max_support": report.max_support,
        "monomials": report.monomials, "supports_checked": report.supports_checked,
        "found": report.counterexample is not None,
        "counterexample": None if report.counterexample is None
        else jsonio.polynomial_to_json(report.counterexample),
        "witness": None if report.witness is None else jsonio.polynomial_to_json(report.witness),
        "message": report.message,
    }


def cmd_cap_search(args):
    if args.inputs:
        labels = [tuple(v) for v in _one(args)["labels"]]
    else:
        labels = random_hexagon_labels(random.Random(args.seed))
        if labels is None:
            raise PreconditionError("no hexagon labelling found")
    if len(labels) != 9:
        raise SchemaError("cap search needs 9 labels")
    h = hexagon_polynomial(labels)
    if not is_closed_faithful(h):
        raise PreconditionError("labels do not make the triangulation polynomial closed and faithful")
    caps = cap_search(labels, args.bound)
    doc = {"labels": [list(v) for v in labels], "polynomial": jsonio.polynomial_to_json(h),
           "caps": [list(t) for t in caps]}
    if caps:
        doc["pairs"] = [jsonio.pair_to_json(q) for q in hexagonal_prism_pairs(labels, caps[0])]
    return doc


def cmd_emit_dot(args):
    return emit_dot(jsonio.graph_from_json(_one(args)))


COMMANDS: dict[str, tuple[Callable, str]] = {
    "validate-graph": (cmd_validate_graph, "check the axial-function axioms of a graph"),
    "orient": (cmd_orient, "solve for an orientation"),
    "polynomial": (cmd_polynomial, "torus polynomial of an oriented graph"),
    "dual": (cmd_dual, "dual polynomial (flips side)"),
    "boundary": (cmd_boundary, "boundary of a cocharacter polynomial"),
    "check-kn": (cmd_check_kn, "is a character polynomial a torus polynomial"),
    "check-fkn": (cmd_check_fkn, "is a cocharacter polynomial closed and faithful"),
    "from-polynomial": (cmd_from_polynomial, "graph realizing a torus polynomial"),
    "prime-reduce": (cmd_prime_reduce, "cancel opposite vertex pairs"),
    "connect-graphs": (cmd_connect_graphs, "connected sum of two graphs"),
    "fixture": (cmd_fixture, "standard graph fixtures"),
    "vertices": (cmd_vertices, "vertex enumeration of an H-polytope"),
    "check-star": (cmd_check_star, "unimodularity at every vertex of a pair"),
    "qt-polynomial": (cmd_qt_polynomial, "quasitoric polynomial of a pair"),
    "graph-of-pair": (cmd_graph_of_pair, "torus graph of a pair"),
    "product-pairs": (cmd_product_pairs, "product of two pairs"),
    "connect-pairs": (cmd_connect_pairs, "connected sum of two pairs"),
    "add-pairs": (cmd_add_pairs, "one pair realizing the sum of two"),
    "realize": (cmd_realize, "pairs realizing a closed faithful polynomial"),
    "localize": (cmd_localize, "Laurent certificate of the localized genus series"),
    "genus": (cmd_genus, "genus value at z = 1"),
    "min-support-search": (cmd_min_support_search, "exhaustive small-support search"),
    "cap-search": (cmd_cap_search, "caps for the hexagonal prism construction"),
    "emit-dot": (cmd_emit_dot, "render a graph as DOT"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torusbordism", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="inputs", action="append", metavar="PATH",
                       help="input JSON file (repeat for two-input commands); default stdin")
        p.add_argument("--out", metavar="PATH", help="output file; default stdout")
        p.add_argument("--seed", type=int, default=0)
        if name == "fixture":
            p.add_argument("name")
            p.add_argument("rank", type=int)
        if name in ("connect-graphs", "connect-pairs"):
            p.add_argument("--at", nargs=2, type=int, metavar=("V", "W"),
                           help="vertices to glue; default: least cancelling pair")
        if name == "realize":
            p.add_argument("--dim", type=int, choices=(1, 2), required=True)
        if name in ("localize", "genus"):
            p.add_argument("--trials", type=int, default=5)
        if name == "localize":
            p.add_argument("--order", type=int, default=2)
        if name == "min-support-search":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--bound", type=int, default=1)
        if name == "cap-search":
            p.add_argument("--bound", type=int, default=2)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        result = func(args)
        status = 0
        if isinstance(result, tuple):
            result, status = result
        text = result if isinstance(result, str) else jsonio.dumps(result) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return status
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except TheoremViolation as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
