"""Seeded random generators for polynomials, pairs and graphs.

Every function takes a ``random.Random`` so that a seed determines the
whole corpus.
"""
from __future__ import annotations

import random

from .exterior import CHAR, COCHAR, ExteriorPolynomial, dual
from .linalg import Vector, matmul_columns
from .quasitoric import (
    QuasitoricPair,
    _connected_sum,
    inverse_matrix_columns,
    negate_columns,
    polygon_pair,
    product_pairs,
    quasitoric_polynomial,
    segment_pair,
    simplex_pair,
    torus_graph_of,
    transform,
    vertex_monomial,
)
from .torusgraph import TorusGraph, connected_sum_graphs, graph_from_polynomial


def _unit(n: int, i: int) -> Vector:
    return tuple(int(i == j) for j in range(n))


def random_vector(rng: random.Random, n: int, bound: int) -> Vector:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(n))
        if any(v):
            return v


def random_unimodular(rng: random.Random, n: int, bound: int = 5, steps: int | None = None) -> tuple[Vector, ...]:
    """Columns of a random unimodular matrix with entries in [-bound, bound]."""
    steps = 3 * n if steps is None else steps
    cols = [list(_unit(n, i)) for i in range(n)]
    for _ in range(steps):
        kind = rng.random()
        if n >= 2 and kind < 0.7:
            i, j = rng.sample(range(n), 2)
            k = rng.choice((-2, -1, 1, 2))
            new = [a + k * b for a, b in zip(cols[j], cols[i])]
            if max(abs(x) for x in new) <= bound:
                cols[j] = new
        elif n >= 2 and kind < 0.85:
            i, j = rng.sample(range(n), 2)
            cols[i], cols[j] = cols[j], cols[i]
        else:
            i = rng.randrange(n)
            cols[i] = [-x for x in cols[i]]
    return tuple(tuple(c) for c in cols)


def random_polynomial(rng: random.Random, n: int, side: str, bound: int = 5,
                      terms: int = 4, max_degree: int | None = None) -> ExteriorPolynomial:
    """Arbitrary (possibly mixed-degree) polynomial with small entries."""
    max_degree = n if max_degree is None else max_degree
    out = []
    for _ in range(rng.randint(0, terms)):
        k = rng.randint(0, max_degree)
        out.append(([random_vector(rng, n, bound) for _ in range(k)], rng.choice((-3, -2, -1, 1, 2, 3))))
    return ExteriorPolynomial(n, side, out)


def random_faithful(rng: random.Random, n: int, side: str = CHAR, bound: int = 5,
                    terms: int = 4) -> ExteriorPolynomial:
    out = [(random_unimodular(rng, n, bound), rng.choice((-2, -1, 1, 2)))
           for _ in range(rng.randint(1, terms))]
    return ExteriorPolynomial(n, side, out)


# pairs ------------------------------------------------------------------------

def random_polygon_labels(rng: random.Random, blowups: int | None = None) -> list[Vector]:
    """A cyclic label sequence in Z^2 with consecutive pairs unimodular."""
    k = rng.randint(-2, 2)
    start = rng.choice([
        [(1, 0), (0, 1), (-1, -1)],
        [(1, 0), (0, 1), (-1, 0), (0, -1)],
        [(1, 0), (0, 1), (-1, k), (0, -1)],
    ])
    labels = list(start)
    for _ in range(rng.randint(0, 2) if blowups is None else blowups):
        i = rng.randrange(len(labels))
        a, b = labels[i], labels[(i + 1) % len(labels)]
        labels.insert(i + 1, (a[0] + b[0], a[1] + b[1]))
    m = random_unimodular(rng, 2, bound=3)
    labels = [tuple(int(x) for x in matmul_columns(m, [lab])[0]) for lab in labels]
    if rng.random() < 0.5:
        labels.reverse()
    return labels


def random_simplex_pair(rng: random.Random, n: int) -> QuasitoricPair:
    last = tuple(rng.choice((-1, 1)) for _ in range(n))
    return transform(simplex_pair(n, last), random_unimodular(rng, n, bound=3))


def random_base_pair(rng: random.Random, n: int) -> QuasitoricPair:
    """Simplices, polygons and products of lower-dimensional pairs."""
    if n == 1:
        return QuasitoricPair(segment_pair().base, [(rng.choice((-1, 1)),), (rng.choice((-1, 1)),)],
                              segment_pair().polytope)
    choices = ["simplex", "product"] + (["polygon", "polygon"] if n == 2 else [])
    kind = rng.choice(choices)
    if kind == "simplex":
        q = random_simplex_pair(rng, n)
    elif kind == "polygon":
        q = polygon_pair(random_polygon_labels(rng))
    else:
        k = rng.randint(1, n - 1)
        q = product_pairs(random_base_pair(rng, k), random_base_pair(rng, n - k))
        q = transform(q, random_unimodular(rng, n, bound=2))
    if rng.random() < 0.4:
        q = negate_columns(q, [f for f in range(q.m) if rng.random() < 0.3])
    return q


def align_for_sum(q1: QuasitoricPair, v: int, q2: QuasitoricPair, w: int) -> QuasitoricPair | None:
    """Change the lattice basis of q2 so that vertex w cancels vertex v of q1.

    Returns None when impossible (in rank 1 the vertex signs must differ).
    """
    n = q1.n
    l1 = q1.vertex_labels(v)
    l2 = q2.vertex_labels(w)
    s1, s2 = q1.base.signs[v], q2.base.signs[w]
    target = list(l1)
    if s1 == s2:
        if n < 2:
            return None
        target[0], target[1] = target[1], target[0]
    m = matmul_columns(target, inverse_matrix_columns(l2))
    out = transform(q2, m)
    k1, c1 = vertex_monomial(q1, v)
    k2, c2 = vertex_monomial(out, w)
    if k1 != k2 or c1 + c2 != 0:
        return None
    return out


def random_sum_instance(rng: random.Random, n: int):
    """(q1, v, q2', w) with vertex w of q2' cancelling vertex v of q1."""
    while True:
        q1 = random_base_pair(rng, n)
        q2 = random_base_pair(rng, n)
        v = rng.randrange(len(q1.base))
        w = rng.randrange(len(q2.base))
        q2a = align_for_sum(q1, v, q2, w)
        if q2a is not None and max(abs(x) for c in q2a.lam for x in c) <= 12:
            return q1, v, q2a, w


def random_pair(rng: random.Random, n: int) -> QuasitoricPair:
    """A base pair, sometimes followed by a connected sum with another."""
    if rng.random() < 0.35:
        q1, v, q2, w = random_sum_instance(rng, n)
        return _connected_sum(q1, v, q2, w)[0]
    return random_base_pair(rng, n)


def random_closed_rank2(rng: random.Random, cycles: int | None = None) -> ExteriorPolynomial:
    """A sum of polygon-cycle polynomials with random signs."""
    total = ExteriorPolynomial(2, COCHAR)
    for _ in range(rng.randint(1, 3) if cycles is None else cycles):
        labels = random_polygon_labels(rng)
        term = ExteriorPolynomial(2, COCHAR, [
            ((labels[i], labels[(i + 1) % len(labels)]), 1) for i in range(len(labels))])
        total = total + term * rng.choice((-1, 1))
    return total


# graphs -----------------------------------------------------------------------

def corpus_graphs(rng: random.Random, count: int, max_rank: int = 3) -> list[tuple[str, TorusGraph]]:
    """Oriented torus graphs from pairs, products, connected sums and polynomials."""
    out = []
    kinds = ["pair", "product", "pair-sum", "graph-sum", "from-polynomial"]
    while len(out) < count:
        kind = kinds[len(out) % len(kinds)]
        n = rng.randint(1, max_rank)
        if kind == "pair":
            g = torus_graph_of(random_pair(rng, n))
        elif kind == "product":
            if n == 1:
                n = 2
            k = rng.randint(1, n - 1)
            g = torus_graph_of(product_pairs(random_base_pair(rng, k), random_base_pair(rng, n - k)))
        elif kind == "pair-sum":
            q1, v, q2, w = random_sum_instance(rng, n)
            g = torus_graph_of(_connected_sum(q1, v, q2, w)[0])
        elif kind == "graph-sum":
            q1, v, q2, w = random_sum_instance(rng, n)
            g = connected_sum_graphs(torus_graph_of(q1), v, torus_graph_of(q2), w)
        else:
            h = dual(quasitoric_polynomial(random_pair(rng, n)))
            h = h + dual(quasitoric_polynomial(random_base_pair(rng, n))) * rng.choice((-1, 1))
            g = graph_from_polynomial(h)
        out.append((kind, g))
    return out

