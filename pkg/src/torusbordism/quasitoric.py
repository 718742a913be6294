"""Quasitoric pairs: an oriented simple polytope plus a characteristic matrix.

The characteristic matrix is stored as one integer column per facet
(``lam[f]`` is the cocharacter assigned to facet f).  Connected sums and
products work purely on :class:`OrientedCombinatorialData`; an
:class:`HPolytope` is kept only when the base came from one.
"""
from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError, SchemaError
from .exterior import COCHAR, ExteriorPolynomial
from .linalg import Vector, det, dual_basis, inverse_rows, matmul_columns, sort_with_sign
from .polytope import (
    HPolytope,
    OrientedCombinatorialData,
    enumerate_vertices,
    point_data,
    polygon,
    product_polytope,
    simplex,
)
from .torusgraph import Dart, TorusGraph


class QuasitoricPair:
    __slots__ = ("base", "lam", "polytope")

    def __init__(self, base: OrientedCombinatorialData | HPolytope, lam: Sequence[Sequence[int]],
                 polytope: HPolytope | None = None):
        if isinstance(base, HPolytope):
            polytope = base
            base = enumerate_vertices(base)
        self.base = base
        self.polytope = polytope
        self.lam = tuple(tuple(int(x) for x in col) for col in lam)
        if len(self.lam) != base.m:
            raise PreconditionError(
                f"characteristic matrix has {len(self.lam)} columns for {base.m} facets")
        if any(len(col) != base.n for col in self.lam):
            raise SchemaError(f"characteristic columns must have length {base.n}")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def matrix_rows(self) -> list[list[int]]:
        return [[col[i] for col in self.lam] for i in range(self.n)]

    def vertex_labels(self, v: int) -> tuple[Vector, ...]:
        return tuple(self.lam[f] for f in self.base.orderings[v])

    def __eq__(self, other):
        if not isinstance(other, QuasitoricPair):
            return NotImplemented
        return (self.base, self.lam) == (other.base, other.lam)

    def __hash__(self):
        return hash((self.base, self.lam))

    def __repr__(self):
        return f"QuasitoricPair(n={self.n}, facets={self.m}, vertices={len(self.base)})"


def check_star(q: QuasitoricPair) -> bool:
    """True iff the characteristic columns at every vertex form a Z-basis."""
    return all(det(q.vertex_labels(v)) in (1, -1) for v in range(len(q.base)))


def _require_star(q: QuasitoricPair) -> None:
    for v in range(len(q.base)):
        d = det(q.vertex_labels(v))
        if d not in (1, -1):
            raise PreconditionError(f"vertex {v}: characteristic columns have det {d}")


def vertex_monomial(q: QuasitoricPair, v: int) -> tuple[tuple[Vector, ...], int]:
    """(canonical generators, coefficient) contributed by vertex v."""
    sign, key = sort_with_sign(q.vertex_labels(v))
    return key, q.base.signs[v] * sign


def quasitoric_polynomial(q: QuasitoricPair) -> ExteriorPolynomial:
    """Signed sum over vertices of the wedge of characteristic columns in positive order."""
    _require_star(q)
    return ExteriorPolynomial(q.n, COCHAR, [vertex_monomial(q, v) for v in range(len(q.base))])


def torus_graph_of(q: QuasitoricPair) -> TorusGraph:
    """The 1-skeleton with dual labels.

    Vertex ids are base vertex indices; the dart at v leaving facet
    ``orderings[v][i]`` has id v*n + i and carries the i-th dual basis
    vector of the characteristic columns at v.
    """
    _require_star(q)
    n, base = q.n, q.base
    nb = base.neighbors()
    sigma, darts = {}, []
    for v, order in enumerate(base.orderings):
        cols = q.vertex_labels(v)
        sigma[v] = base.signs[v] * det(cols)
        duals = dual_basis(cols)
        for i, f in enumerate(order):
            w = nb[v][i]
            (g,) = base.vertices[w] - base.vertices[v]
            darts.append(Dart(v * n + i, v, w * n + base.orderings[w].index(g), duals[i]))
    return TorusGraph(n, sigma, darts)


# constructions --------------------------------------------------------------

def permute_facets(q: QuasitoricPair, perm: Sequence[int]) -> QuasitoricPair:
    """Rename facet f to perm[f]; the characteristic columns follow."""
    lam = [None] * q.m
    for f, g in enumerate(perm):
        lam[g] = q.lam[f]
    return QuasitoricPair(q.base.relabel_facets(perm), lam)


def transform(q: QuasitoricPair, matrix_columns: Sequence[Vector]) -> QuasitoricPair:
    """Apply an integer matrix (given by columns) to every characteristic column."""
    return QuasitoricPair(q.base, matmul_columns(matrix_columns, q.lam), q.polytope)


def negate_columns(q: QuasitoricPair, facets) -> QuasitoricPair:
    facets = set(facets)
    lam = [tuple(-x for x in col) if f in facets else col for f, col in enumerate(q.lam)]
    return QuasitoricPair(q.base, lam, q.polytope)


def product_pairs(q1: QuasitoricPair, q2: QuasitoricPair) -> QuasitoricPair:
    """Facets of q1 first, then those of q2; block-diagonal characteristic matrix."""
    n1, n2, m1 = q1.n, q2.n, q1.m
    orderings, signs = [], []
    for o1, s1 in zip(q1.base.orderings, q1.base.signs):
        for o2, s2 in zip(q2.base.orderings, q2.base.signs):
            orderings.append(o1 + tuple(m1 + f for f in o2))
            signs.append(s1 * s2)
    base = OrientedCombinatorialData(n1 + n2, m1 + q2.m, orderings, signs)
    lam = [c + (0,) * n2 for c in q1.lam] + [(0,) * n1 + c for c in q2.lam]
    poly = None
    if q1.polytope is not None and q2.polytope is not None:
        poly = product_polytope(q1.polytope, q2.polytope)
    return QuasitoricPair(base, lam, poly)


def _connected_sum(q1: QuasitoricPair, v: int, q2: QuasitoricPair, w: int):
    """Connected sum at cancelling vertices; also returns old->new vertex maps."""
    if q1.n != q2.n:
        raise PreconditionError(f"rank mismatch: {q1.n} vs {q2.n}")
    n = q1.n
    if n < 1:
        raise PreconditionError("connected sums need n >= 1")
    _require_star(q1)
    _require_star(q2)
    key1, c1 = vertex_monomial(q1, v)
    key2, c2 = vertex_monomial(q2, w)
    if key1 != key2 or c1 + c2 != 0:
        raise PreconditionError(f"vertex monomials at {v} and {w} do not cancel")
    b1, b2 = q1.base, q2.base
    at_v, at_w = b1.orderings[v], b2.orderings[w]
    cv = [f for f in range(q1.m) if f not in b1.vertices[v]]
    cw = [f for f in range(q2.m) if f not in b2.vertices[w]]
    new1 = {f: i for i, f in enumerate(cv)}
    lam = [q1.lam[f] for f in cv]
    if n >= 2:
        glued = len(cv)
        for i, f in enumerate(at_v):
            new1[f] = glued + i
            lam.append(q1.lam[f])
        by_label = {q2.lam[f]: f for f in at_w}
        new2 = {}
        for i, f in enumerate(at_v):
            g = by_label.get(q1.lam[f])
            if g is None:
                raise PreconditionError("label matching between the vertex facets is not a bijection")
            new2[g] = glued + i
        offset = glued + n
    else:
        new2 = {}
        offset = len(cv)
    for i, f in enumerate(cw):
        new2[f] = offset + i
        lam.append(q2.lam[f])
    orderings, signs = [], []
    map1, map2 = {}, {}
    for u, (order, s) in enumerate(zip(b1.orderings, b1.signs)):
        if u != v:
            map1[u] = len(orderings)
            orderings.append(tuple(new1[f] for f in order))
            signs.append(s)
    for u, (order, s) in enumerate(zip(b2.orderings, b2.signs)):
        if u != w:
            map2[u] = len(orderings)
            orderings.append(tuple(new2[f] for f in order))
            signs.append(s)
    base = OrientedCombinatorialData(n, len(lam), orderings, signs)
    return QuasitoricPair(base, lam), map1, map2


def connected_sum_pairs(q1: QuasitoricPair, v: int, q2: QuasitoricPair, w: int) -> QuasitoricPair:
    """Remove cancelling vertices v, w and glue the facets through them.

    Facets are ordered: facets of q1 missing v, then the n glued facets in
    the order of v's positive ordering, then facets of q2 missing w.  In
    dimension 1 no facets are glued.  Vertices of q1 (minus v) come first.
    """
    return _connected_sum(q1, v, q2, w)[0]


def canceling_vertex_pairs(q1: QuasitoricPair, q2: QuasitoricPair) -> list[tuple[int, int]]:
    monos2: dict = {}
    for w in range(len(q2.base)):
        monos2.setdefault(vertex_monomial(q2, w), []).append(w)
    pairs = []
    for v in range(len(q1.base)):
        key, c = vertex_monomial(q1, v)
        for w in monos2.get((key, -c), ()):
            pairs.append((v, w))
    return sorted(pairs)


# fixtures -------------------------------------------------------------------

def _unit(n: int, i: int) -> Vector:
    return tuple(int(i == j) for j in range(n))


def segment_pair(sign: int = 1) -> QuasitoricPair:
    """[0, 1] with facets x >= 0 and 1 - x >= 0, labelled (sign) and (-sign)."""
    return QuasitoricPair(simplex(1), [(sign,), (-sign,)])


def simplex_pair(n: int, last: Sequence[int] | None = None) -> QuasitoricPair:
    """Standard simplex with columns e_1..e_n on the coordinate facets.

    The last facet gets ``last`` (default -(e_1+...+e_n), the projective
    space labelling); (★) holds exactly when every entry of ``last`` is +-1.
    """
    if last is None:
        last = tuple(-1 for _ in range(n))
    return QuasitoricPair(simplex(n), [_unit(n, i) for i in range(n)] + [tuple(last)])


def point_pair() -> QuasitoricPair:
    """The rank-0 pair: the unit for products."""
    return QuasitoricPair(point_data(), [])


def polygon_pair(labels: Sequence[Vector]) -> QuasitoricPair:
    """k-gon with facets in counterclockwise order labelled cyclically."""
    return QuasitoricPair(polygon(len(labels)), labels)


def inverse_matrix_columns(cols: Sequence[Vector]) -> tuple[Vector, ...]:
    rows = inverse_rows(cols)
    n = len(cols)
    return tuple(tuple(int(rows[i][j]) for i in range(n)) for j in range(n))
