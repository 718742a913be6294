"""Fixed-point sums along one-parameter specializations.

For vertex data (sign, star labels) the localized genus series is

    sum_p sign(p) * prod_i (1 / (1 - V_i(p)) - t)

i.e. each factor gamma_t(V - 1) / (1 - V) with gamma_t cut to 1 + t(V - 1).
Each character V is sent to z^<xi, label> for an integer vector xi, and
every coefficient of t^k is reduced to an exact rational function of z.  For a torus graph all of them
must be Laurent polynomials; we check this for several random xi, so a
pass is a sampled certificate rather than a proof.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Union

from flint import fmpz_poly

from .errors import NonGenericError, PreconditionError, TheoremViolation
from .exterior import ExteriorPolynomial, fixed_point_map
from .laurent import UnivariateLaurentRational, monomial, one_minus_power
from .linalg import Vector, dot
from .torusgraph import TorusGraph

XI_BOUND = 7
XI_RETRIES = 100


@dataclass(frozen=True)
class LocalData:
    """Signed vertex stars plus, when known, the edges joining them."""

    n: int
    vertices: tuple[tuple[int, tuple[Vector, ...]], ...]
    # (vertex index, star position, dart id) for both ends of each edge
    edges: tuple[tuple[int, int, int, int, int, int], ...] = ()


def local_data(source: Union[TorusGraph, ExteriorPolynomial, LocalData]) -> LocalData:
    """Vertex data of an oriented graph, or of a character polynomial read
    through the fixed point map (one vertex per term, its coefficient as sign)."""
    if isinstance(source, LocalData):
        return source
    if isinstance(source, ExteriorPolynomial):
        f = fixed_point_map(source)
        return LocalData(source.n, tuple((c, gens) for gens, c in f))
    if not source.is_oriented:
        raise PreconditionError("localization needs an oriented graph")
    ids = list(source.vertices)
    index = {v: i for i, v in enumerate(ids)}
    verts = tuple((source.sigma(v), source.star_labels(v)) for v in ids)
    position = {d.id: i for v in ids for i, d in enumerate(source.star(v))}
    edges = []
    for d in source.darts.values():
        e = source.partner(d)
        if d.id < e.id:
            edges.append((index[d.vertex], position[d.id], d.id,
                          index[e.vertex], position[e.id], e.id))
    return LocalData(source.n, verts, tuple(edges))


def specialize(source, xi: Sequence[int]) -> list[list[int]]:
    """Per-vertex exponents <xi, label>; raises NonGenericError on a zero."""
    data = local_data(source)
    if len(xi) != data.n:
        raise PreconditionError(f"xi has length {len(xi)}, expected {data.n}")
    out = []
    for _, labels in data.vertices:
        ws = [dot(xi, a) for a in labels]
        if 0 in ws:
            raise NonGenericError(f"xi = {tuple(xi)} pairs to zero with a label")
        out.append(ws)
    return out


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> fmpz_poly:
    return fmpz_poly.cyclotomic(d)


def _divisors(a: int) -> list[int]:
    return [d for d in range(1, a + 1) if a % d == 0]


def _factor(w: int) -> tuple[fmpz_poly, fmpz_poly]:
    """1 / (1 - z^w) written as num / (1 - z^|w|)."""
    a = abs(w)
    num = fmpz_poly([1]) if w > 0 else monomial(-1, a)
    return num, one_minus_power(a)


@dataclass
class SpecializationResult:
    xi: tuple[int, ...]
    orders: list[UnivariateLaurentRational]
    edges: list[dict] = field(default_factory=list)

    @property
    def laurent(self) -> list[bool]:
        return [r.is_laurent for r in self.orders]

    def to_json(self) -> dict:
        return {"xi": list(self.xi),
                "orders": [dict(r.to_json(), order=k, laurent=r.is_laurent)
                           for k, r in enumerate(self.orders)],
                "edges": self.edges}


@dataclass
class GenusCertificate:
    """Results for each specialization; ``passed`` needs every order Laurent."""

    order: int
    results: list[SpecializationResult]

    @property
    def passed(self) -> bool:
        return all(all(r.laurent) for r in self.results)

    @property
    def xis(self) -> list[tuple[int, ...]]:
        return [r.xi for r in self.results]

    def to_json(self) -> dict:
        return {"order": self.order, "pass": self.passed,
                "certified": "sampled specializations only",
                "specializations": [r.to_json() for r in self.results]}


def _series(data: LocalData, order: int, xi: tuple[int, ...]) -> SpecializationResult:
    weights = specialize(data, xi)
    need: Counter = Counter()
    for ws in weights:
        here = Counter(d for w in ws for d in _divisors(abs(w)))
        for d, k in here.items():
            need[d] = max(need[d], k)
    common = fmpz_poly([1])
    for d, k in sorted(need.items()):
        common *= _cyclotomic(d) ** k
    numerators = [fmpz_poly([0]) for _ in range(order + 1)]
    for (sign, _), ws in zip(data.vertices, weights):
        layers = [fmpz_poly([1])] + [fmpz_poly([0])] * order
        den = fmpz_poly([1])
        for w in ws:
            num, d = _factor(w)
            den *= d
            layers = [layers[k] * num - (layers[k - 1] * d if k else 0) for k in range(order + 1)]
        cof, rem = divmod(common, den)
        if not rem.is_zero():
            raise TheoremViolation("common denominator is not a multiple of a vertex denominator")
        for k in range(order + 1):
            numerators[k] += sign * cof * layers[k]
    result = SpecializationResult(tuple(xi), [UnivariateLaurentRational(p, common) for p in numerators])
    result.edges = _edge_log(data, weights)
    return result


def _edge_log(data: LocalData, weights: list[list[int]]) -> list[dict]:
    """Whether the two endpoint terms of each edge have no pole along that edge.

    With E = 1 - z^|a| for the edge weight a and D_p, D_q the remaining
    denominators at the two ends, the numerator of the pair sum over
    E * D_p * D_q must be divisible by E.
    """
    log = []
    for p, ip, dp, q, iq, dq in data.edges:
        parts = []
        for v, skip in ((p, ip), (q, iq)):
            num, rest = fmpz_poly([data.vertices[v][0]]), fmpz_poly([1])
            for i, w in enumerate(weights[v]):
                nu, d = _factor(w)
                num *= nu
                if i != skip:
                    rest *= d
            parts.append((num, rest))
        (num_p, rest_p), (num_q, rest_q) = parts
        weight = abs(weights[p][ip])
        ok = ((num_p * rest_q + num_q * rest_p) % one_minus_power(weight)).is_zero()
        log.append({"darts": [dp, dq], "weight": weight, "cancels": bool(ok)})
    return log


def genus_series(source, order: int, xi: Sequence[int]) -> GenusCertificate:
    """Exact t-coefficients up to ``order`` at one specialization xi."""
    data = local_data(source)
    return GenusCertificate(order, [_series(data, order, tuple(int(x) for x in xi))])


def _is_generic(data: LocalData, xi) -> bool:
    return all(dot(xi, a) != 0 for _, labels in data.vertices for a in labels)


def draw_generic(data: LocalData, rng: random.Random, avoid=()) -> tuple[int, ...]:
    """Uniform entries in [-7, 7], rejecting zero pairings (100 attempts)."""
    fallback = None
    for _ in range(XI_RETRIES):
        xi = tuple(rng.randint(-XI_BOUND, XI_BOUND) for _ in range(data.n))
        if _is_generic(data, xi):
            if xi not in avoid:
                return xi
            fallback = fallback or xi
    if fallback is not None:
        return fallback
    raise NonGenericError(f"no generic specialization found in {XI_RETRIES} attempts")


def laurent_check(source, trials: int = 5, order: int = 2, seed: int = 0) -> GenusCertificate:
    """Genus series at ``trials`` random generic xi; see GenusCertificate.passed."""
    data = local_data(source)
    rng = random.Random(seed)
    xis: list[tuple[int, ...]] = []
    for _ in range(trials):
        xis.append(draw_generic(data, rng, set(xis)))
    results = sorted((_series(data, order, xi) for xi in xis), key=lambda r: r.xi)
    return GenusCertificate(order, results)


def genus_at_one(source, trials: int = 5, seed: int = 0) -> int:
    """Order-0 value at z = 1, checked to agree across specializations."""
    cert = laurent_check(source, trials=trials, order=0, seed=seed)
    values = set()
    for r in cert.results:
        if not r.orders[0].is_laurent:
            raise PreconditionError(f"order-0 sum is not a Laurent polynomial at xi = {r.xi}")
        values.add(r.orders[0].at_one())
    if len(values) != 1:
        raise TheoremViolation(f"genus value depends on the specialization: {sorted(values)}")
    (value,) = values
    if value.denominator != 1:
        raise TheoremViolation(f"non-integral genus value {value}")
    return int(value)
