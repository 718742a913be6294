"""Oriented torus graphs stored as darts (half-edges) with an involution.

Each edge appears as two darts ``e`` and ``partner(e)``.  A dart carries the
character-side label of the edge as seen from its initial vertex.  Vertex
signs are ``None`` until an orientation has been chosen.
"""
from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError, SchemaError, TheoremViolation
from .exterior import (
    CHAR,
    ExteriorPolynomial,
    is_torus_polynomial,
)
from .linalg import Vector, det, dual_basis, sort_with_sign


@dataclass(frozen=True)
class Dart:
    id: int
    vertex: int
    partner: int
    label: Vector


class TorusGraph:
    """An n-valent multigraph with character labels on darts.

    ``vertices`` maps vertex id to its sign (+1, -1, or None when the graph
    carries no orientation).  The structural invariants (fixed-point-free
    involution, no loops, labels of rank n) are checked on construction;
    the axial axioms are checked by :func:`validate_axial`.
    """

    __slots__ = ("n", "_vertices", "_darts", "_star")

    def __init__(self, n: int, vertices: Mapping[int, int | None], darts: Iterable[Dart]):
        self.n = n
        self._vertices = MappingProxyType(dict(sorted(vertices.items())))
        dmap = {}
        for d in darts:
            if d.id in dmap:
                raise SchemaError(f"duplicate dart id {d.id}")
            label = tuple(int(x) for x in d.label)
            if len(label) != n:
                raise SchemaError(f"dart {d.id} label {label} does not have rank {n}")
            dmap[d.id] = Dart(d.id, d.vertex, d.partner, label)
        self._darts = MappingProxyType(dict(sorted(dmap.items())))
        for v, s in self._vertices.items():
            if s not in (1, -1, None):
                raise SchemaError(f"vertex {v} has sign {s!r}")
        star = defaultdict(list)
        for d in self._darts.values():
            if d.vertex not in self._vertices:
                raise SchemaError(f"dart {d.id} starts at unknown vertex {d.vertex}")
            other = self._darts.get(d.partner)
            if other is None or other.partner != d.id or d.partner == d.id:
                raise SchemaError(f"dart {d.id}: partner is not a fixed-point-free involution")
            if other.vertex == d.vertex:
                raise PreconditionError(f"dart {d.id} is a loop at vertex {d.vertex}")
            star[d.vertex].append(d.id)
        self._star = {v: tuple(star.get(v, ())) for v in self._vertices}

    # access --------------------------------------------------------------
    @property
    def vertices(self) -> Mapping[int, int | None]:
        return self._vertices

    @property
    def darts(self) -> Mapping[int, Dart]:
        return self._darts

    def sigma(self, v: int) -> int | None:
        return self._vertices[v]

    def star(self, v: int) -> tuple[Dart, ...]:
        """Outgoing darts at v, in dart-id order."""
        return tuple(self._darts[i] for i in self._star[v])

    def star_labels(self, v: int) -> tuple[Vector, ...]:
        return tuple(d.label for d in self.star(v))

    def partner(self, d: Dart | int) -> Dart:
        did = d.id if isinstance(d, Dart) else d
        return self._darts[self._darts[did].partner]

    def target(self, d: Dart | int) -> int:
        return self.partner(d).vertex

    @property
    def is_oriented(self) -> bool:
        return all(s is not None for s in self._vertices.values())

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusGraph):
            return NotImplemented
        return (self.n, dict(self._vertices), dict(self._darts)) == (
            other.n, dict(other._vertices), dict(other._darts))

    def __hash__(self):
        return hash((self.n, tuple(self._vertices.items()), tuple(self._darts.items())))

    def __repr__(self) -> str:
        return f"TorusGraph(n={self.n}, vertices={len(self._vertices)}, edges={len(self._darts) // 2})"

    # derived graphs ------------------------------------------------------
    def with_signs(self, signs: Mapping[int, int | None]) -> "TorusGraph":
        return TorusGraph(self.n, {v: signs.get(v) for v in self._vertices}, self._darts.values())

    def unoriented(self) -> "TorusGraph":
        return self.with_signs({})

    def reversed_orientation(self) -> "TorusGraph":
        return self.with_signs({v: (None if s is None else -s) for v, s in self._vertices.items()})

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted, ordered by least id."""
        seen: set[int] = set()
        comps = []
        for v in self._vertices:
            if v in seen:
                continue
            comp, queue = [], deque([v])
            seen.add(v)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for d in self.star(u):
                    w = self.target(d)
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    @classmethod
    def empty(cls, n: int) -> "TorusGraph":
        return cls(n, {}, [])


def relabeled(g: TorusGraph, vertex_offset: int, dart_offset: int) -> TorusGraph:
    return TorusGraph(
        g.n,
        {v + vertex_offset: s for v, s in g.vertices.items()},
        [Dart(d.id + dart_offset, d.vertex + vertex_offset, d.partner + dart_offset, d.label)
         for d in g.darts.values()],
    )


def disjoint_union(g1: TorusGraph, g2: TorusGraph) -> TorusGraph:
    """Union with g2's ids shifted past g1's; g1 ids are kept."""
    if g1.n != g2.n:
        raise PreconditionError(f"rank mismatch: {g1.n} vs {g2.n}")
    voff = max(g1.vertices, default=-1) + 1 - min(g2.vertices, default=0)
    doff = max(g1.darts, default=-1) + 1 - min(g2.darts, default=0)
    g2 = relabeled(g2, voff, doff)
    return TorusGraph(g1.n, {**g1.vertices, **g2.vertices},
                      list(g1.darts.values()) + list(g2.darts.values()))


# axial conditions ----------------------------------------------------------

def congruence_class(x: Sequence[int], a: Sequence[int]) -> Vector:
    """Canonical representative of x in Z^n / <a> (a nonzero)."""
    i = next(k for k, ai in enumerate(a) if ai)
    # the k with 0 <= x[i] - k*a[i] < |a[i]|
    k = x[i] // a[i] if a[i] > 0 else -(x[i] // -a[i])
    return tuple(xj - k * aj for xj, aj in zip(x, a))


@dataclass
class AxialReport:
    """Per-condition outcome of :func:`validate_axial`."""

    reversal: bool = True      # label(partner) = +-label
    basis: bool = True         # star labels form a Z-basis
    congruence: bool | None = True   # None: skipped because basis failed
    connected: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.reversal and self.basis and bool(self.congruence)


def validate_axial(g: TorusGraph, require_connected: bool = False) -> AxialReport:
    """Check the torus-axial-function axioms.

    Raises PreconditionError for a vertex of valence != n, or for a
    disconnected graph when ``require_connected`` is set.  A star whose
    labels fail to form a basis (including a non-primitive label) is
    reported as a failure of the basis condition; the congruence condition
    is then skipped, as it needs primitive labels.
    """
    report = AxialReport()
    for v in g.vertices:
        if len(g.star(v)) != g.n:
            raise PreconditionError(f"vertex {v} has valence {len(g.star(v))}, expected {g.n}")
    comps = g.components()
    report.connected = len(comps) <= 1
    if require_connected and not report.connected:
        raise PreconditionError(f"graph has {len(comps)} connected components")
    for d in g.darts.values():
        back = g.partner(d).label
        if back != d.label and back != tuple(-x for x in d.label):
            report.reversal = False
            report.failures.append(f"dart {d.id}: reverse label {back} is not +-{d.label}")
    for v in g.vertices:
        labels = g.star_labels(v)
        if det(labels) not in (1, -1):
            report.basis = False
            report.failures.append(f"vertex {v}: labels {list(labels)} are not a basis")
    if not report.basis:
        report.congruence = None
        return report
    for d in g.darts.values():
        rev = g.partner(d)
        here = Counter(congruence_class(e.label, d.label) for e in g.star(d.vertex) if e.id != d.id)
        there = Counter(congruence_class(e.label, d.label) for e in g.star(rev.vertex) if e.id != rev.id)
        if here != there:
            report.congruence = False
            report.failures.append(f"dart {d.id}: stars at {d.vertex} and {rev.vertex} "
                                   f"do not agree modulo {d.label}")
    return report


def require_valid(g: TorusGraph) -> None:
    report = validate_axial(g)
    if not report.ok:
        raise PreconditionError("invalid torus graph: " + "; ".join(report.failures))


def find_orientation(g: TorusGraph) -> TorusGraph:
    """Solve for vertex signs with sigma(i(e)) a(e) = -sigma(i(e')) a(e').

    Equal labels on a dart pair force opposite signs, opposite labels force
    equal signs.  The least vertex id of each component gets +1.  Raises
    PreconditionError("non-orientable ...") if the relation is inconsistent.
    """
    require_valid(g)
    signs: dict[int, int] = {}
    for comp in g.components():
        root = comp[0]
        signs[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for d in g.star(u):
                rev = g.partner(d)
                want = -signs[u] if rev.label == d.label else signs[u]
                w = rev.vertex
                if w not in signs:
                    signs[w] = want
                    queue.append(w)
                elif signs[w] != want:
                    raise PreconditionError(
                        f"non-orientable: inconsistent signs around vertex {w} (via dart {d.id})")
    return g.with_signs(signs)


def is_orientation(g: TorusGraph) -> bool:
    if not g.is_oriented:
        return False
    for d in g.darts.values():
        rev = g.partner(d)
        lhs = tuple(g.sigma(d.vertex) * x for x in d.label)
        rhs = tuple(-g.sigma(rev.vertex) * x for x in rev.label)
        if lhs != rhs:
            return False
    return True


# polynomials ---------------------------------------------------------------

def vertex_monomial(g: TorusGraph, v: int) -> tuple[tuple[Vector, ...], int]:
    """(canonical generators, coefficient) of sigma(v) * det * wedge(star labels)."""
    s = g.sigma(v)
    if s is None:
        raise PreconditionError("the torus polynomial needs an oriented graph")
    labels = g.star_labels(v)
    d = det(labels)
    if d not in (1, -1):
        raise PreconditionError(f"vertex {v}: star labels are not a basis")
    sign, key = sort_with_sign(labels)
    return key, s * d * sign


def torus_polynomial(g: TorusGraph) -> ExteriorPolynomial:
    """Sum over vertices of the star wedge, ordered so its determinant is sigma(v).

    In rank 1 this gives sigma(v) * det(a) * a, i.e. +-a as the sign rule
    for one-valent graphs requires.
    """
    return ExteriorPolynomial(g.n, CHAR, [vertex_monomial(g, v) for v in g.vertices])


def is_prime(g: TorusGraph) -> bool:
    seen = set()
    for v in g.vertices:
        key, c = vertex_monomial(g, v)
        if (key, -c) in seen:
            return False
        seen.add((key, c))
    return True


def _glue(g: TorusGraph, p: int, q: int) -> TorusGraph:
    """Remove vertices p and q, joining the outer ends of equal-label darts."""
    by_label = {d.label: d for d in g.star(q)}
    match = {}
    for x in g.star(p):
        y = by_label.get(x.label)
        if y is None:
            raise PreconditionError(f"no dart at {q} carries label {x.label}")
        match[x.id] = y.id
    if len(set(match.values())) != len(g.star(q)) or len(match) != len(g.star(p)):
        raise PreconditionError("label matching between the two stars is not a bijection")
    new_partner = {}
    for x, y in match.items():
        a, b = g.darts[x].partner, g.darts[y].partner
        if a == y:
            continue  # an edge p--q disappears with its endpoints
        if g.darts[a].vertex == g.darts[b].vertex:
            raise PreconditionError(
                f"gluing at ({p}, {q}) would create a loop at vertex {g.darts[a].vertex}")
        new_partner[a] = b
        new_partner[b] = a
    darts = [
        Dart(d.id, d.vertex, new_partner.get(d.id, d.partner), d.label)
        for d in g.darts.values() if d.vertex not in (p, q)
    ]
    vertices = {v: s for v, s in g.vertices.items() if v not in (p, q)}
    return TorusGraph(g.n, vertices, darts)


def canceling_pairs(g: TorusGraph) -> list[tuple[int, int]]:
    monos = {v: vertex_monomial(g, v) for v in g.vertices}
    by_key = defaultdict(list)
    for v, (key, c) in monos.items():
        by_key[key].append((v, c))
    pairs = []
    for group in by_key.values():
        for i, (u, cu) in enumerate(group):
            for w, cw in group[i + 1:]:
                if cu + cw == 0:
                    pairs.append((min(u, w), max(u, w)))
    return sorted(pairs)


def prime_reduce(g: TorusGraph) -> TorusGraph:
    """Cancel vertex pairs with opposite monomials until none remain.

    The least canceling pair (by vertex ids) is glued first.
    """
    require_valid(g)
    if not is_orientation(g):
        raise PreconditionError("prime reduction needs an oriented graph")
    while True:
        pairs = canceling_pairs(g)
        if not pairs:
            return g
        g = _glue(g, *pairs[0])


def connected_sum_graphs(g1: TorusGraph, p1: int, g2: TorusGraph, p2: int) -> TorusGraph:
    """Glue g1 minus p1 to g2 minus p2 along equal-label darts.

    g1 keeps its ids; g2's ids are shifted as in :func:`disjoint_union`.
    """
    key1, c1 = vertex_monomial(g1, p1)
    key2, c2 = vertex_monomial(g2, p2)
    if key1 != key2 or c1 + c2 != 0:
        raise PreconditionError(f"vertex monomials at {p1} and {p2} do not cancel")
    union = disjoint_union(g1, g2)
    shift = max(g1.vertices, default=-1) + 1 - min(g2.vertices, default=0)
    return _glue(union, p1, p2 + shift)


def graph_from_polynomial(h: ExteriorPolynomial) -> TorusGraph:
    """Build an oriented torus graph whose torus polynomial is h.

    Every monomial c * s_1^...^s_n contributes |c| vertices.  Vertex i's
    dual generators give n stubs (the dual wedge with one factor omitted);
    stubs with equal generator sets and opposite signs are joined, taking
    the lexicographically least pairing.  The dart made from the stub
    omitting the j-th dual generator is labelled by the j-th primal one.
    """
    if h.side != CHAR:
        raise PreconditionError("graph_from_polynomial takes a character-side polynomial")
    if not is_torus_polynomial(h):
        raise PreconditionError("polynomial is not in K_n: its dual has nonzero boundary")
    n = h.n
    vertices: dict[int, int] = {}
    gens_of: dict[int, tuple[Vector, ...]] = {}
    stubs = defaultdict(lambda: ([], []))  # key -> (positive stubs, negative stubs)
    vid = 0
    for gens, c in h:
        sgn = 1 if c > 0 else -1
        duals = dual_basis(gens)
        for _ in range(abs(c)):
            vertices[vid] = sgn * det(gens)
            gens_of[vid] = gens
            for j in range(n):
                s, key = sort_with_sign(duals[:j] + duals[j + 1:])
                coeff = sgn * s * (1 if j % 2 == 0 else -1)
                stubs[key][0 if coeff > 0 else 1].append((vid, j))
            vid += 1
    partner = {}
    for key in sorted(stubs):
        pos, neg = stubs[key]
        if len(pos) != len(neg):
            raise TheoremViolation(f"stubs over {key} cannot be matched ({len(pos)} vs {len(neg)})")
        for (u, j), (w, k) in zip(sorted(pos), sorted(neg)):
            if u == w:
                raise TheoremViolation(f"stub matching produced a loop at vertex {u}")
            partner[u * n + j] = w * n + k
            partner[w * n + k] = u * n + j
    darts = [Dart(v * n + j, v, partner[v * n + j], gens_of[v][j])
             for v in vertices for j in range(n)]
    return TorusGraph(n, vertices, darts)


# fixtures ------------------------------------------------------------------

def _unit(n: int, i: int) -> Vector:
    return tuple(int(k == i) for k in range(n))


def sphere_graph(n: int) -> TorusGraph:
    """Two vertices joined by n edges labelled by the standard basis, signs (+1, -1)."""
    if n < 1:
        raise PreconditionError("the sphere fixture needs n >= 1")
    darts = []
    for i in range(n):
        t = _unit(n, i)
        darts.append(Dart(i, 0, n + i, t))
        darts.append(Dart(n + i, 1, i, t))
    return TorusGraph(n, {0: 1, 1: -1}, darts)


def k4_graph() -> TorusGraph:
    """Complete graph on four vertices, rank 3, opposite edges sharing a label; unoriented."""
    t = [_unit(3, i) for i in range(3)]
    edges = [((0, 1), t[0]), ((2, 3), t[0]), ((0, 2), t[1]), ((1, 3), t[1]),
             ((0, 3), t[2]), ((1, 2), t[2])]
    darts = []
    for k, ((u, w), lab) in enumerate(edges):
        darts.append(Dart(2 * k, u, 2 * k + 1, lab))
        darts.append(Dart(2 * k + 1, w, 2 * k, lab))
    return TorusGraph(3, {v: None for v in range(4)}, darts)


FIXTURES = ("sphere", "k4")


def standard_fixture(name: str, n: int) -> TorusGraph:
    if name == "sphere":
        return sphere_graph(n)
    if name == "k4":
        if n != 3:
            raise PreconditionError("the k4 fixture exists only for n = 3")
        return k4_graph()
    raise PreconditionError(f"unknown fixture {name!r}; choose from {FIXTURES}")
