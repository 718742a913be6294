"""Brute-force searches: small-support kernel elements and prism caps."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .exterior import CHAR, COCHAR, ExteriorPolynomial, boundary, dual, is_torus_polynomial
from .linalg import Vector, det, kernel_basis, rank
from .polytope import OrientedCombinatorialData, polygon, simplex
from .quasitoric import QuasitoricPair, product_pairs, segment_pair


def lattice_vectors(n: int, bound: int) -> list[Vector]:
    return [v for v in itertools.product(range(-bound, bound + 1), repeat=n) if any(v)]


def faithful_monomials(n: int, bound: int) -> list[tuple[Vector, ...]]:
    """Canonical generator tuples (sorted) of unimodular n-sets with entries in [-bound, bound]."""
    return [gens for gens in itertools.combinations(lattice_vectors(n, bound), n)
            if det(gens) in (1, -1)]


def _dual_boundary(n: int, gens: tuple[Vector, ...]) -> dict:
    return dict(boundary(dual(ExteriorPolynomial.monomial(n, CHAR, gens))).terms)


@dataclass
class MinSupportReport:
    n: int
    bound: int
    max_support: int
    monomials: int
    supports_checked: int
    counterexample: ExteriorPolynomial | None
    witness: ExteriorPolynomial | None

    @property
    def message(self) -> str:
        if self.counterexample is None:
            return (f"no nonzero K_{self.n} element with ≤ {self.max_support} monomials "
                    f"(entries in [-{self.bound},{self.bound}])")
        return f"found a K_{self.n} element with ≤ {self.max_support} monomials"


def _integral(vec: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [x // g for x in ints] if g else ints


def _element(n: int, support, coeffs) -> ExteriorPolynomial:
    return ExteriorPolynomial(n, CHAR, [(gens, c) for gens, c in zip(support, coeffs)])


def min_support_search(n: int, bound: int, max_support: int | None = None,
                       witness: bool = True, witness_limit: int = 2_000_000) -> MinSupportReport:
    """Look for nonzero K_n elements supported on at most ``max_support`` monomials.

    A combination of distinct monomials lies in K_n exactly when its
    coefficient vector is in the kernel of the matrix whose columns are the
    boundaries of the dual monomials.  If every set of ``max_support``
    monomials has independent columns, no such element exists (smaller sets
    inherit independence).  With ``witness`` the search continues to one
    more monomial and returns the first element it finds there.
    """
    if n < 1 or bound < 1:
        raise PreconditionError("need n >= 1 and bound >= 1")
    size = n if max_support is None else max_support
    monos = faithful_monomials(n, bound)
    columns = {gens: _dual_boundary(n, gens) for gens in monos}

    def kernel(support):
        faces = sorted({f for gens in support for f in columns[gens]})
        rows = [[columns[gens].get(f, 0) for gens in support] for f in faces]
        if rank(rows) == len(support):
            return []
        return kernel_basis(rows, len(support))

    k = min(size, len(monos))
    checked, found = 0, None
    for support in itertools.combinations(monos, k):
        checked += 1
        basis = kernel(support)
        if basis:
            found = _element(n, support, _integral(basis[0]))
            break
    wit = None
    if witness and found is None and math.comb(len(monos), k + 1) <= witness_limit:
        for support in itertools.combinations(monos, k + 1):
            basis = kernel(support)
            if len(basis) == 1 and all(basis[0]):
                wit = _element(n, support, _integral(basis[0]))
                break
    if wit is not None and not is_torus_polynomial(wit):
        raise PreconditionError("witness failed membership")  # pragma: no cover
    return MinSupportReport(n, bound, size, len(monos), checked, found, wit)


# a 3x3 grid triangulation of the torus ---------------------------------------------

# grid points (x, y) -> label index; opposite sides of the square are identified
GRID_LABELS = {(0, 0): 0, (1, 0): 1, (2, 0): 0,
               (0, 1): 2, (1, 1): 3, (2, 1): 2,
               (0, 2): 0, (1, 2): 1, (2, 2): 0}
GRID_TRIANGLES = [((0, 0), (1, 0), (1, 1)), ((0, 0), (1, 1), (0, 1)),
                  ((1, 0), (2, 0), (2, 1)), ((1, 0), (2, 1), (1, 1)),
                  ((0, 1), (1, 1), (1, 2)), ((0, 1), (1, 2), (0, 2)),
                  ((1, 1), (2, 1), (2, 2)), ((1, 1), (2, 2), (1, 2))]


def grid_torus_polynomial(labels: Sequence[Vector]) -> ExteriorPolynomial:
    """Sum over the eight triangles, each read clockwise, of the wedge of its labels."""
    terms = []
    for tri in GRID_TRIANGLES:
        (ax, ay), (bx, by), (cx, cy) = tri
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) > 0:
            tri = (tri[0], tri[2], tri[1])
        terms.append(([labels[GRID_LABELS[pt]] for pt in tri], 1))
    return ExteriorPolynomial(3, COCHAR, terms)


def tetrahedron_pair(labels: Sequence[Vector]) -> QuasitoricPair:
    """The 3-simplex with facet i labelled labels[i]."""
    return QuasitoricPair(simplex(3), labels)


# the open hexagonal-prism example ----------------------------------------------

# apex label index -> hexagon cycle of label indices, as in the torus triangulation
HEXAGON_CYCLES = {
    0: (1, 3, 6, 2, 4, 7),
    5: (1, 2, 6, 7, 4, 3),
    8: (1, 7, 6, 3, 4, 2),
}


def hexagon_polynomial(labels: Sequence[Vector]) -> ExteriorPolynomial:
    """sum over apexes a of s_a ^ (sum over cycle edges s_i ^ s_j)."""
    terms = []
    for apex, cycle in HEXAGON_CYCLES.items():
        for i, j in zip(cycle, cycle[1:] + cycle[:1]):
            terms.append(((labels[apex], labels[i], labels[j]), 1))
    return ExteriorPolynomial(3, COCHAR, terms)


def _triangles() -> list[tuple[int, int, int]]:
    return [(a, i, j) for a, cycle in HEXAGON_CYCLES.items()
            for i, j in zip(cycle, cycle[1:] + cycle[:1])]


def random_hexagon_labels(rng: random.Random, bound: int = 1) -> list[Vector] | None:
    """Nine distinct labels making every triangle of the triangulation a basis.

    Depth-first over shuffled candidates, checking each triangle as soon as
    its three labels are placed.
    """
    vecs = lattice_vectors(3, bound)
    order = [0, 1, 3, 6, 2, 4, 7, 5, 8]
    triangles = _triangles()
    labels: dict[int, Vector] = {}

    def ok(k: int) -> bool:
        for tri in triangles:
            if k in tri and all(x in labels for x in tri):
                if det([labels[x] for x in tri]) not in (1, -1):
                    return False
        return True

    def place(depth: int) -> bool:
        if depth == len(order):
            return True
        k = order[depth]
        for v in rng.sample(vecs, len(vecs)):
            if v in labels.values():
                continue
            labels[k] = v
            if ok(k) and place(depth + 1):
                return True
            del labels[k]
        return False

    return [labels[k] for k in range(9)] if place(0) else None


def cap_search(labels: Sequence[Vector], bound: int) -> list[Vector]:
    """All caps t in [-bound, bound]^3 with t ^ s_i ^ s_j a basis on every hexagon edge."""
    edges = {(labels[i], labels[j]) for cycle in HEXAGON_CYCLES.values()
             for i, j in zip(cycle, cycle[1:] + cycle[:1])}
    return [t for t in lattice_vectors(3, bound)
            if all(det((t, a, b)) in (1, -1) for a, b in edges)]


def hexagonal_prism_pairs(labels: Sequence[Vector], cap: Vector) -> list[QuasitoricPair]:
    """Hexagon times segment; side facets follow the cycle, ends get s_apex and the cap."""
    hexagon = QuasitoricPair(polygon(6), [(1, 0)] * 6)
    prism = product_pairs(hexagon, segment_pair())
    base: OrientedCombinatorialData = prism.base
    out = []
    for apex, cycle in HEXAGON_CYCLES.items():
        lam = [labels[i] for i in cycle] + [labels[apex], tuple(cap)]
        out.append(QuasitoricPair(base, lam))
    return out
