"""JSON encodings of polynomials, graphs and pairs.

Output is canonical: sorted keys, no whitespace, terms and ids in sorted
order, so equal objects print to identical bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import jsonschema

from .errors import SchemaError
from .exterior import SIDES, ExteriorPolynomial
from .polytope import HPolytope, OrientedCombinatorialData
from .quasitoric import QuasitoricPair
from .torusgraph import Dart, TorusGraph

_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_RATIONAL = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+(/\d+)?\s*$"}]}

POLYNOMIAL_SCHEMA = {
    "type": "object",
    "required": ["n", "side", "terms"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "side": {"enum": list(SIDES)},
        "terms": {"type": "array", "items": {
            "type": "object",
            "required": ["coeff", "gens"],
            "properties": {"coeff": {"type": "integer"},
                           "gens": {"type": "array", "items": _INT_LIST}},
        }},
    },
}

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["n", "vertices", "darts"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "vertices": {"type": "array", "items": {
            "type": "object",
            "required": ["id"],
            "properties": {"id": {"type": "integer"},
                           "sigma": {"enum": [1, -1, None]}},
        }},
        "darts": {"type": "array", "items": {
            "type": "object",
            "required": ["id", "vertex", "partner", "label"],
            "properties": {"id": {"type": "integer"}, "vertex": {"type": "integer"},
                           "partner": {"type": "integer"}, "label": _INT_LIST},
        }},
    },
}

POLYTOPE_SCHEMA = {
    "type": "object",
    "required": ["normals", "offsets"],
    "properties": {
        "normals": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
        "offsets": {"type": "array", "items": _RATIONAL},
    },
}

PAIR_SCHEMA = {
    "type": "object",
    "required": ["n", "lambda"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "polytope": POLYTOPE_SCHEMA,
        "combinatorial": {
            "type": "object",
            "required": ["facets", "orderings"],
            "properties": {
                "facets": {"type": "integer", "minimum": 0},
                "vertices": {"type": "array", "items": _INT_LIST},
                "orderings": {"type": "array", "items": _INT_LIST},
                "signs": {"type": "array", "items": {"enum": [1, -1]}},
            },
        },
        "lambda": {"type": "array", "items": _INT_LIST},
    },
    "oneOf": [{"required": ["polytope"]}, {"required": ["combinatorial"]}],
}


def _validate(doc: Any, schema: dict, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise SchemaError(f"invalid {what} JSON at '{path}': {exc.message}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None


# polynomials -------------------------------------------------------------------

def polynomial_to_json(h: ExteriorPolynomial) -> dict:
    return {"n": h.n, "side": h.side,
            "terms": [{"coeff": c, "gens": [list(g) for g in gens]} for gens, c in h]}


def polynomial_from_json(doc: Any) -> ExteriorPolynomial:
    _validate(doc, POLYNOMIAL_SCHEMA, "polynomial")
    try:
        return ExteriorPolynomial(doc["n"], doc["side"],
                                  [(t["gens"], t["coeff"]) for t in doc["terms"]])
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


# graphs --------------------------------------------------------------------

def graph_to_json(g: TorusGraph) -> dict:
    return {"n": g.n,
            "vertices": [{"id": v, "sigma": s} for v, s in g.vertices.items()],
            "darts": [{"id": d.id, "vertex": d.vertex, "partner": d.partner, "label": list(d.label)}
                      for d in g.darts.values()]}


def graph_from_json(doc: Any) -> TorusGraph:
    _validate(doc, GRAPH_SCHEMA, "graph")
    ids = [v["id"] for v in doc["vertices"]]
    if len(set(ids)) != len(ids):
        raise SchemaError("duplicate vertex id")
    vertices = {v["id"]: v.get("sigma") for v in doc["vertices"]}
    darts = [Dart(d["id"], d["vertex"], d["partner"], tuple(d["label"])) for d in doc["darts"]]
    return TorusGraph(doc["n"], vertices, darts)


# pairs ---------------------------------------------------------------------

def _rat(x: Fraction) -> str:
    return str(Fraction(x))


def polytope_to_json(p: HPolytope) -> dict:
    return {"normals": [[_rat(x) for x in a] for a in p.normals],
            "offsets": [_rat(b) for b in p.offsets]}


def polytope_from_json(doc: Any) -> HPolytope:
    if isinstance(doc, dict) and "polytope" in doc:
        doc = doc["polytope"]
    _validate(doc, POLYTOPE_SCHEMA, "polytope")
    try:
        return HPolytope(doc["normals"], doc["offsets"])
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational: {exc}") from None


def pair_to_json(q: QuasitoricPair) -> dict:
    doc = {"n": q.n, "lambda": q.matrix_rows}
    if q.polytope is not None:
        doc["polytope"] = polytope_to_json(q.polytope)
    else:
        doc["combinatorial"] = {
            "facets": q.m,
            "vertices": [sorted(o) for o in q.base.orderings],
            "orderings": [list(o) for o in q.base.orderings],
            "signs": list(q.base.signs),
        }
    return doc


def pair_from_json(doc: Any) -> QuasitoricPair:
    """Read a pair.  Combinatorial orderings are positive unless ``signs`` says otherwise."""
    _validate(doc, PAIR_SCHEMA, "pair")
    n = doc["n"]
    rows = doc["lambda"]
    if len(rows) != n:
        raise SchemaError(f"lambda must have {n} rows")
    if "polytope" in doc:
        poly = polytope_from_json(doc["polytope"])
        if poly.n != n:
            raise SchemaError(f"polytope has dimension {poly.n}, expected {n}")
        m = poly.m
        base = poly
    else:
        comb = doc["combinatorial"]
        m = comb["facets"]
        if "vertices" in comb and [sorted(v) for v in comb["vertices"]] != \
                [sorted(o) for o in comb["orderings"]]:
            raise SchemaError("vertices and orderings disagree")
        base = OrientedCombinatorialData(n, m, comb["orderings"], comb.get("signs"))
    if any(len(r) != m for r in rows):
        raise SchemaError(f"lambda rows must have {m} entries")
    columns = [tuple(r[f] for r in rows) for f in range(m)] if n else [()] * m
    return QuasitoricPair(base, columns)


def combinatorial_to_json(data: OrientedCombinatorialData) -> dict:
    doc = {"n": data.n, "facets": data.m,
           "orderings": [list(o) for o in data.orderings],
           "signs": list(data.signs),
           "edges": [list(e) for e in data.edges()]}
    if data.points is not None:
        doc["points"] = [[_rat(x) for x in p] for p in data.points]
    return doc
