"""Realizing closed faithful polynomials by quasitoric pairs.

``add_pairs`` merges two pairs into one whose polynomial is the sum.  When
no vertex of one cancels a vertex of the other, it inserts bridges: a
prism over a simplex, labelled so that one end carries a basis ``a, S``
and the other ``b, S``, summed with its own mirror image.  The bridge has
zero polynomial but contains vertices of both signs for both bases, so
chaining bridges walks a vertex monomial from one basis to another, one
generator at a time.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

from .errors import PreconditionError, TheoremViolation
from .exterior import COCHAR, ExteriorPolynomial, is_closed_faithful
from .linalg import Vector, det, inverse_rows
from .polytope import polygon, product_polytope, simplex
from .quasitoric import (
    QuasitoricPair,
    _connected_sum,
    canceling_vertex_pairs,
    check_star,
    quasitoric_polynomial,
    segment_pair,
    vertex_monomial,
)


# dimension one and two ------------------------------------------------------

def realize_dim1(h: ExteriorPolynomial) -> list[QuasitoricPair]:
    """|c| segments realizing h = c((1) - (-1))."""
    if h.n != 1 or h.side != COCHAR or not is_closed_faithful(h):
        raise PreconditionError("realize_dim1 needs a closed faithful rank-1 cocharacter polynomial")
    c = h.terms.get(((1,),), 0)
    if h != ExteriorPolynomial(1, COCHAR, [([(1,)], c), ([(-1,)], -c)]):
        raise TheoremViolation(f"closed rank-1 polynomial {h} is not a multiple of (1) - (-1)")
    return [segment_pair(1 if c > 0 else -1) for _ in range(abs(c))]


def cycle_decomposition(h: ExteriorPolynomial) -> list[list[Vector]]:
    """Split a closed rank-2 polynomial into directed cycles of generators.

    Each monomial c * s^u (canonical, c > 0) is |c| arcs s -> u, and arcs
    u -> s when c < 0.  A zero boundary is flow conservation, so repeatedly
    walking along least outgoing arcs from the least node closes up.
    """
    out = defaultdict(list)
    for (s, u), c in h:
        a, b = (s, u) if c > 0 else (u, s)
        out[a].extend([b] * abs(c))
    for arcs in out.values():
        arcs.sort()
    cycles = []
    while any(out.values()):
        start = min(node for node, arcs in out.items() if arcs)
        path, pos = [start], {start: 0}
        while True:
            arcs = out[path[-1]]
            if not arcs:
                raise TheoremViolation("flow is not conserved: walk got stuck")
            nxt = arcs[0]
            if nxt in pos:
                cycle = path[pos[nxt]:]
                for x, y in zip(cycle, cycle[1:] + [nxt]):
                    out[x].remove(y)
                cycles.append(cycle)
                break
            pos[nxt] = len(path)
            path.append(nxt)
    return cycles


def realize_dim2(h: ExteriorPolynomial, trace: list | None = None) -> QuasitoricPair:
    """One pair realizing a nonzero closed faithful rank-2 polynomial."""
    if h.n != 2 or h.side != COCHAR or not is_closed_faithful(h):
        raise PreconditionError("realize_dim2 needs a closed faithful rank-2 cocharacter polynomial")
    if not h:
        raise PreconditionError("the zero polynomial is realized by the empty list of pairs")
    pairs = [QuasitoricPair(polygon(len(c)), c) for c in cycle_decomposition(h)]
    result = pairs[0]
    for q in pairs[1:]:
        result = add_pairs(result, q, trace)
    if quasitoric_polynomial(result) != h:
        raise TheoremViolation("realize_dim2 result does not reproduce the input")
    return result


# bridges -------------------------------------------------------------------

def bridge_pair(a: Vector, b: Vector, shared: Sequence[Vector]) -> tuple[QuasitoricPair, QuasitoricPair, QuasitoricPair]:
    """(Q, mirror Q, their connected sum W) for a step a -> b keeping ``shared``.

    Q is a segment times an (n-1)-simplex.  Its end facets carry b (x = 0)
    and a (x = 1); the side facets over the coordinate facets of the simplex
    carry the shared generators and the last side facet their sum.  The
    mirror swaps a and b.  W glues the two at the vertices lying on the end
    carrying a in Q and not on the first side facet.
    """
    n = len(shared) + 1
    total = tuple(sum(col) for col in zip(*shared))
    body = product_polytope(simplex(1), simplex(n - 1))
    sides = list(shared) + [total]
    q = QuasitoricPair(body, [b, a] + sides)
    mirror = QuasitoricPair(body, [a, b] + sides)
    for pair in (q, mirror):
        if not check_star(pair):
            raise TheoremViolation(f"bridge prism for {a} -> {b} over {list(shared)} fails (★)")
    glue = frozenset({1} | set(range(3, n + 2)))
    v = q.base.vertex_index(glue)
    w = mirror.base.vertex_index((glue - {1}) | {0})
    if vertex_monomial(q, v)[0] != vertex_monomial(mirror, w)[0] or \
            vertex_monomial(q, v)[1] + vertex_monomial(mirror, w)[1] != 0:
        raise TheoremViolation("bridge prism and its mirror do not cancel at the gluing vertices")
    wpair, _, _ = _connected_sum(q, v, mirror, w)
    if not check_star(wpair) or quasitoric_polynomial(wpair):
        raise TheoremViolation("bridge does not have zero polynomial")
    return q, mirror, wpair


def _is_basis(gens) -> bool:
    return det(list(gens)) in (1, -1)


def _direct_path(src: Sequence[Vector], tgt: Sequence[Vector]) -> list[tuple[Vector, Vector]] | None:
    """Replace generators one at a time, every intermediate a basis, if possible."""
    src_only = [s for s in src if s not in tgt]
    tgt_only = [t for t in tgt if t not in src]
    for targets in itertools.permutations(tgt_only):
        for order in itertools.permutations(range(len(src_only))):
            current = list(src)
            steps = []
            for i in order:
                a, b = src_only[i], targets[i]
                current[current.index(a)] = b
                if not _is_basis(current):
                    break
                steps.append((a, b))
            else:
                return steps
    return None


def _elementary_path(src: Sequence[Vector], tgt: Sequence[Vector]) -> list[tuple[Vector, Vector]]:
    """Column operations taking the basis src to tgt, one generator per step.

    With Y = tgt^-1 src, integer column operations reduce Y to a permutation
    matrix; each operation replaces one column of src by an integer
    combination that keeps it a basis.
    """
    n = len(src)
    inv = inverse_rows(tgt)
    y = [[int(sum(inv[i][k] * src[j][k] for k in range(n))) for j in range(n)] for i in range(n)]
    # y is stored as columns: y[j] = coordinates of src[j] in the target basis
    y = [[y[i][j] for i in range(n)] for j in range(n)]
    x = [tuple(c) for c in src]
    steps = []

    def to_vec(col):
        return tuple(sum(col[i] * tgt[i][r] for i in range(n)) for r in range(n))

    def replace(j, col):
        old = x[j]
        y[j] = col
        x[j] = to_vec(col)
        steps.append((old, x[j]))

    pivots = []
    free = list(range(n))
    for r in range(n):
        while True:
            nz = [j for j in free if y[j][r]]
            p = min(nz, key=lambda j: (abs(y[j][r]), j))
            others = [j for j in nz if j != p]
            if not others:
                break
            for j in others:
                k = y[j][r] // y[p][r]
                if k:
                    replace(j, [u - k * v for u, v in zip(y[j], y[p])])
        if y[p][r] == -1:
            replace(p, [-u for u in y[p]])
        pivots.append(p)
        free.remove(p)
    for r, p in enumerate(pivots):
        for r2 in range(r + 1, n):
            k = y[p][r2]
            if k:
                q = pivots[r2]
                replace(p, [u - k * v for u, v in zip(y[p], y[q])])
    if sorted(x) != sorted(tgt):
        raise TheoremViolation("elementary basis path did not reach the target")
    return steps


def basis_path(src: Sequence[Vector], tgt: Sequence[Vector]) -> list[tuple[Vector, Vector]]:
    """Steps (a, b), each swapping one generator, from basis src to basis tgt.

    Prefers replacing generators of src directly by those of tgt; falls back
    to elementary column operations when some intermediate would not be a
    basis.  Equal generator sets give a two-step detour out and back, which
    is what lets the sign of a vertex monomial flip.
    """
    if set(src) == set(tgt):
        a = src[0]
        detour = tuple(x + y for x, y in zip(src[0], src[1 % len(src)]))
        if len(src) == 1:
            detour = tuple(-x for x in a)
        return [(a, detour), (detour, a)]
    steps = _direct_path(list(src), list(tgt))
    if steps is None:
        steps = _elementary_path(list(src), list(tgt))
    return steps


# merging ------------------------------------------------------------------

def _find_vertex(q: QuasitoricPair, key, coeff, exclude=()) -> int | None:
    for u in range(len(q.base)):
        if u not in exclude and vertex_monomial(q, u) == (key, coeff):
            return u
    return None


def _sorted_key(gens) -> tuple:
    return tuple(sorted(gens))


def add_pairs(q1: QuasitoricPair, q2: QuasitoricPair, trace: list | None = None) -> QuasitoricPair:
    """A single pair whose polynomial is the sum of the two polynomials (n >= 2).

    Three cases, tried in order: (a) a vertex of q1 cancels one of q2, so a
    plain connected sum works; (b) some vertex monomials differ in exactly
    one generator, so one bridge suffices; (c) otherwise a chain of bridges
    moves a vertex monomial of q1 to the negative of one of q2.  Every
    prism built along the way is checked for (★).  ``trace``, if given,
    receives a record of the case and each bridge.
    """
    n = q1.n
    if q2.n != n:
        raise PreconditionError(f"rank mismatch: {q1.n} vs {q2.n}")
    if n < 2:
        raise PreconditionError("add_pairs needs n >= 2")
    g1, g2 = quasitoric_polynomial(q1), quasitoric_polynomial(q2)
    if not g1 or not g2:
        raise PreconditionError("add_pairs needs pairs with nonzero polynomials")
    log = trace if trace is not None else []

    pairs = canceling_vertex_pairs(q1, q2)
    if pairs:
        v, w = pairs[0]
        log.append({"case": "a", "vertices": (v, w)})
        result = _connected_sum(q1, v, q2, w)[0]
    else:
        result = _bridged_sum(q1, q2, log)
    if quasitoric_polynomial(result) != g1 + g2:
        raise TheoremViolation("add_pairs result does not have the summed polynomial")
    return result


def _choose_bridge_pair(q1: QuasitoricPair, q2: QuasitoricPair):
    """Least vertex pair maximizing shared generators (ties by indices)."""
    best = None
    for v in range(len(q1.base)):
        k1, c1 = vertex_monomial(q1, v)
        for w in range(len(q2.base)):
            k2, c2 = vertex_monomial(q2, w)
            shared = len(set(k1) & set(k2))
            if shared == len(k1):
                shared = -1  # identical sets with equal signs need a detour; rank last
            if best is None or shared > best[0]:
                best = (shared, v, w)
    return best


def _bridged_sum(q1: QuasitoricPair, q2: QuasitoricPair, log: list) -> QuasitoricPair:
    n = q1.n
    shared, v, w = _choose_bridge_pair(q1, q2)
    key1, c1 = vertex_monomial(q1, v)
    key2, c2 = vertex_monomial(q2, w)
    steps = basis_path(key1, key2)
    log.append({"case": "b" if shared == n - 1 else "c", "vertices": (v, w), "steps": len(steps)})
    current, tracked = q1, v
    gens, coeff = list(key1), c1
    for i, (a, b) in enumerate(steps):
        rest = [g for g in gens if g != a]
        bridge_q, bridge_m, bridge = bridge_pair(a, b, rest)
        u_in = _find_vertex(bridge, _sorted_key(gens), -coeff)
        if u_in is None:
            raise TheoremViolation(f"bridge for {a} -> {b} has no vertex cancelling the current one")
        new_gens = rest + [b]
        new_key = _sorted_key(new_gens)
        want = [-c2] if i == len(steps) - 1 else [1, -1]
        u_out = None
        for c in want:
            u_out = _find_vertex(bridge, new_key, c, exclude=(u_in,))
            if u_out is not None:
                coeff = c
                break
        if u_out is None:
            raise TheoremViolation(f"bridge for {a} -> {b} lacks the outgoing vertex")
        current, _, map2 = _connected_sum(current, tracked, bridge, u_in)
        tracked = map2[u_out]
        gens = list(new_key)
        log.append({"bridge": (a, b), "shared": tuple(rest),
                    "prism": bridge_q, "mirror": bridge_m, "sum": bridge})
    return _connected_sum(current, tracked, q2, w)[0]
