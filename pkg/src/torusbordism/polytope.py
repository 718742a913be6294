"""Simple polytopes: exact H-representations and oriented combinatorial data.

An :class:`HPolytope` is {x : <a_i, x> >= b_i} with rational a_i, b_i.
:func:`enumerate_vertices` turns one into :class:`OrientedCombinatorialData`,
which is all the quasitoric layer needs: facet ids, the n facets through
each vertex, and a per-vertex ordering of those facets together with a sign
saying whether the ordering is positively oriented.
"""
from __future__ import annotations

import itertools
from collections import defaultdict, deque
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, SchemaError
from .linalg import det, dot, null_vector, permutation_sign, rank, solve


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class HPolytope:
    """Intersection of half-spaces <normal_i, x> >= offset_i."""

    __slots__ = ("n", "normals", "offsets")

    def __init__(self, normals: Sequence[Sequence], offsets: Sequence):
        if len(normals) != len(offsets):
            raise SchemaError("normals and offsets differ in length")
        self.normals = tuple(tuple(_frac(x) for x in a) for a in normals)
        self.offsets = tuple(_frac(b) for b in offsets)
        dims = {len(a) for a in self.normals}
        if len(dims) > 1:
            raise SchemaError("normals have different lengths")
        self.n = dims.pop() if dims else 0

    @property
    def m(self) -> int:
        return len(self.normals)

    def contains(self, x: Sequence) -> bool:
        return all(dot(a, x) >= b for a, b in zip(self.normals, self.offsets))

    def __eq__(self, other):
        if not isinstance(other, HPolytope):
            return NotImplemented
        return (self.normals, self.offsets) == (other.normals, other.offsets)

    def __hash__(self):
        return hash((self.normals, self.offsets))

    def __repr__(self):
        return f"HPolytope(n={self.n}, facets={self.m})"


def simplex(n: int) -> HPolytope:
    """Standard simplex: x_i >= 0 (facet i) and 1 - sum x >= 0 (facet n)."""
    normals = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    normals.append(tuple(-1 for _ in range(n)))
    return HPolytope(normals, [0] * n + [-1])


def cube(n: int) -> HPolytope:
    """[0,1]^n with facets x_i >= 0 and 1 - x_i >= 0 interleaved per coordinate."""
    normals, offsets = [], []
    for i in range(n):
        e = tuple(int(i == j) for j in range(n))
        normals += [e, tuple(-x for x in e)]
        offsets += [0, -1]
    return HPolytope(normals, offsets)


def polygon(k: int) -> HPolytope:
    """An integer k-gon with facets listed counterclockwise.

    The first k - 1 facets are tangent lines y >= 2ax - a^2 to the parabola
    y = x^2 at a = -1, 1, 2, ..., k - 2, read left to right along the
    bottom; the last facet is a horizontal lid above all bottom vertices.
    Tangents at a and b meet at height ab.
    """
    if k < 3:
        raise PreconditionError("a polygon needs at least 3 sides")
    points = [-1] + list(range(1, k - 1))
    lid = max(a * b for a, b in zip(points, points[1:])) + 1
    normals = [(-2 * a, 1) for a in points] + [(0, -1)]
    offsets = [-a * a for a in points] + [-lid]
    return HPolytope(normals, offsets)


def product_polytope(p1: HPolytope, p2: HPolytope) -> HPolytope:
    z1, z2 = (0,) * p1.n, (0,) * p2.n
    normals = [a + z2 for a in p1.normals] + [z1 + a for a in p2.normals]
    return HPolytope(normals, p1.offsets + p2.offsets)


class OrientedCombinatorialData:
    """Facets 0..m-1 and vertices given by their n incident facets.

    ``orderings[v]`` lists the facets at v and ``signs[v]`` is +1 when that
    ordering is positive, -1 otherwise.  For n >= 2 the constructor swaps
    the first two facets of any negative ordering so that all signs are +1;
    in dimension 1 (a segment) the sign is kept since there is nothing to
    swap.  Construction verifies simplicity of the combinatorics
    (n-valent, connected 1-skeleton) and that adjacent orderings agree with
    a single global orientation.
    """

    __slots__ = ("n", "m", "orderings", "signs", "vertices", "points", "_neighbors", "_index")

    def __init__(self, n: int, m: int, orderings: Sequence[Sequence[int]],
                 signs: Sequence[int] | None = None, points=None, check: bool = True):
        self.n, self.m = n, m
        if signs is None:
            signs = [1] * len(orderings)
        if len(signs) != len(orderings):
            raise SchemaError("orderings and signs differ in length")
        ords, sgns = [], []
        for order, s in zip(orderings, signs):
            order = tuple(int(f) for f in order)
            if s not in (1, -1):
                raise SchemaError(f"vertex sign must be +-1, got {s!r}")
            if n >= 2 and s == -1:
                order = (order[1], order[0]) + order[2:]
                s = 1
            ords.append(order)
            sgns.append(s)
        self.orderings = tuple(ords)
        self.signs = tuple(sgns)
        self.vertices = tuple(frozenset(o) for o in self.orderings)
        self.points = tuple(points) if points is not None else None
        self._index = {fs: i for i, fs in enumerate(self.vertices)}
        self._neighbors = None
        if check:
            self._check()

    def __len__(self) -> int:
        return len(self.orderings)

    def __eq__(self, other):
        if not isinstance(other, OrientedCombinatorialData):
            return NotImplemented
        return (self.n, self.m, self.orderings, self.signs) == (
            other.n, other.m, other.orderings, other.signs)

    def __hash__(self):
        return hash((self.n, self.m, self.orderings, self.signs))

    def __repr__(self):
        return f"OrientedCombinatorialData(n={self.n}, facets={self.m}, vertices={len(self)})"

    def vertex_index(self, facets) -> int | None:
        return self._index.get(frozenset(facets))

    def neighbor(self, v: int, facet: int) -> int:
        """The vertex reached from v along the edge leaving ``facet``."""
        return self.neighbors()[v][self.orderings[v].index(facet)]

    def neighbors(self) -> list[list[int]]:
        """neighbors()[v][i]: vertex adjacent to v across orderings[v][i]."""
        if self._neighbors is None:
            ridge = defaultdict(list)
            for v, fs in enumerate(self.vertices):
                for f in fs:
                    ridge[fs - {f}].append(v)
            nb = []
            for v, order in enumerate(self.orderings):
                row = []
                for f in order:
                    others = [w for w in ridge[self.vertices[v] - {f}] if w != v]
                    if len(others) != 1:
                        raise PreconditionError(
                            f"vertex {v}: leaving facet {f} reaches {len(others)} vertices, expected 1")
                    row.append(others[0])
                nb.append(row)
            self._neighbors = nb
        return self._neighbors

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(v, w), max(v, w)) for v, row in enumerate(self.neighbors()) for w in row})

    def _check(self) -> None:
        n = self.n
        if not self.orderings:
            raise PreconditionError("a polytope needs at least one vertex")
        for v, order in enumerate(self.orderings):
            if len(order) != n or len(set(order)) != n:
                raise PreconditionError(f"vertex {v} must lie on {n} distinct facets, got {order}")
            if any(not 0 <= f < self.m for f in order):
                raise PreconditionError(f"vertex {v} uses a facet id outside 0..{self.m - 1}")
        if len(self._index) != len(self.orderings):
            raise PreconditionError("two vertices lie on the same set of facets")
        used = set().union(*self.vertices)
        if len(used) != self.m:
            raise PreconditionError(f"facets {sorted(set(range(self.m)) - used)} contain no vertex")
        nb = self.neighbors()
        seen, queue = {0}, deque([0])
        while queue:
            v = queue.popleft()
            for w in nb[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self.orderings):
            raise PreconditionError("the 1-skeleton is disconnected")
        for v, order in enumerate(self.orderings):
            for f, w in zip(order, nb[v]):
                if not self._edge_consistent(v, f, w):
                    raise PreconditionError(
                        f"orderings at adjacent vertices {v} and {w} disagree on orientation")

    def _edge_consistent(self, u: int, a: int, v: int) -> bool:
        # For u = S+{a}, v = S+{b}: eps_u * sgn(order_u -> (a, S)) = -eps_v * sgn(order_v -> (b, S)).
        shared = tuple(sorted(self.vertices[u] & self.vertices[v]))
        (b,) = self.vertices[v] - self.vertices[u]
        lhs = self.signs[u] * permutation_sign(self.orderings[u], (a,) + shared)
        rhs = self.signs[v] * permutation_sign(self.orderings[v], (b,) + shared)
        return lhs == -rhs

    def relabel_facets(self, perm: Sequence[int]) -> "OrientedCombinatorialData":
        """New data where old facet f is called perm[f]."""
        return OrientedCombinatorialData(
            self.n, self.m, [tuple(perm[f] for f in o) for o in self.orderings],
            self.signs, self.points)


def point_data() -> OrientedCombinatorialData:
    """The rank-0 polytope: one vertex, no facets."""
    return OrientedCombinatorialData(0, 0, [()], [1])


def _check_bounded(p: HPolytope) -> None:
    n = p.n
    if rank(p.normals) < n:
        raise PreconditionError("unbounded: the normals do not span R^n")
    if n == 1:
        candidates = [(Fraction(1),)]
    else:
        candidates = []
        for rows in itertools.combinations(p.normals, n - 1):
            d = null_vector(rows)
            if d is not None:
                candidates.append(d)
    for d in candidates:
        for direction in (d, tuple(-x for x in d)):
            if all(dot(a, direction) >= 0 for a in p.normals):
                raise PreconditionError(f"unbounded: recession direction {direction}")


def _affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([tuple(x - y for x, y in zip(pt, base)) for pt in points[1:]])


def enumerate_vertices(p: HPolytope) -> OrientedCombinatorialData:
    """Vertices of a simple polytope by brute force over n-subsets of facets.

    Raises PreconditionError if the polytope is unbounded, empty, not
    full-dimensional, not simple, or has a redundant facet.
    """
    n = p.n
    if n == 0:
        if p.m:
            raise PreconditionError("a rank-0 polytope has no facets")
        return point_data()
    _check_bounded(p)
    found: dict[tuple, frozenset] = {}
    for subset in itertools.combinations(range(p.m), n):
        x = solve([p.normals[i] for i in subset], [p.offsets[i] for i in subset])
        if x is None or x in found or not p.contains(x):
            continue
        tight = frozenset(i for i in range(p.m) if dot(p.normals[i], x) == p.offsets[i])
        if len(tight) > n:
            raise PreconditionError(f"not simple: vertex {x} lies on {len(tight)} facets")
        found[x] = tight
    if not found:
        raise PreconditionError("the polytope is empty")
    points = sorted(found)
    if _affine_rank(points) != n:
        raise PreconditionError("the polytope is not full-dimensional")
    for i in range(p.m):
        on = [x for x in points if i in found[x]]
        if _affine_rank(on) != n - 1:
            raise PreconditionError(f"facet {i} is redundant")
    orderings, signs = [], []
    for x in points:
        order = tuple(sorted(found[x]))
        d = det([p.normals[i] for i in order])
        orderings.append(order)
        signs.append(1 if d > 0 else -1)
    return OrientedCombinatorialData(n, p.m, orderings, signs, points=points)
