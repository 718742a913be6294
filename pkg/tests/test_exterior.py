import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import faithful_polynomials, polynomials, unimodular, vectors
from torusbordism.errors import PreconditionError
from torusbordism.exterior import (
    CHAR,
    COCHAR,
    CommutativeFixedPointData,
    ExteriorPolynomial,
    boundary,
    cone,
    dual,
    external_product,
    fixed_point_map,
    is_closed_faithful,
    is_faithful,
    is_torus_polynomial,
    linear_combine,
    wedge,
)
from torusbordism.sampling import random_closed_rank2

P = ExteriorPolynomial


def mono(side, *gens, c=1, n=None):
    n = len(gens[0]) if n is None else n
    return P.monomial(n, side, gens, c)


def inversion_sign(seq):
    inv = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def boundary_oracle(h):
    """Expand d term by term without relying on canonical storage."""
    out = []
    for gens, c in h:
        for i in range(len(gens)):
            out.append((gens[:i] + gens[i + 1:], c * (-1) ** i))
    return P(h.n, COCHAR, out)


def dual_oracle(h):
    out = []
    for gens, c in h:
        m = sympy.Matrix(gens).T
        d = m.inv().T
        out.append(([tuple(int(x) for x in d.col(j)) for j in range(h.n)], c))
    return P(h.n, CHAR if h.side == COCHAR else COCHAR, out)


TRIANGLE = P(2, COCHAR, [([(1, 0), (0, 1)], 1), ([(0, 1), (-1, -1)], 1), ([(-1, -1), (1, 0)], 1)])


# wedge -------------------------------------------------------------------------

def test_wedge_examples():
    s = mono(CHAR, (1, 0))
    u = mono(CHAR, (0, 1))
    assert not wedge(s, s)
    assert not wedge(s, u) + wedge(u, s)
    assert dict(wedge(s, u).terms) == {((0, 1), (1, 0)): -1}


@given(st.lists(vectors(3), min_size=1, max_size=3, unique=True))
def test_canonical_sign_matches_inversion_count(gens):
    h = P.monomial(3, CHAR, gens)
    ((key, c),) = h.terms.items()
    assert list(key) == sorted(gens)
    order = [sorted(gens).index(g) for g in gens]
    assert c == inversion_sign(order)


@given(vectors(3), vectors(3))
def test_antisymmetry_and_nilpotence(s, u):
    a, b = mono(CHAR, s), mono(CHAR, u)
    assert wedge(a, b) == -wedge(b, a)
    assert not wedge(a, a)


@given(polynomials(n=2, max_degree=1), polynomials(n=2, max_degree=1), polynomials(n=2, max_degree=1))
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_rank_and_side_mismatch():
    with pytest.raises(PreconditionError):
        wedge(mono(CHAR, (1, 0)), mono(COCHAR, (1, 0)))
    with pytest.raises(PreconditionError):
        wedge(mono(CHAR, (1, 0)), mono(CHAR, (1,)))


def test_linear_combine():
    h = TRIANGLE
    assert not linear_combine([1, -1], [h, h])
    two = linear_combine([2], [mono(CHAR, (1, 0))])
    assert dict(two.terms) == {((1, 0),): 2}
    a = mono(COCHAR, (1, 0), (0, 1)) + mono(COCHAR, (1, 1))
    b = mono(COCHAR, (1, 0), (0, 1), c=-1)
    assert linear_combine([1, 1], [a, b]) == mono(COCHAR, (1, 1))


# faithfulness and duality ------------------------------------------------------

def test_is_faithful_examples():
    assert is_faithful(mono(CHAR, (1, 0), (0, 1)))
    assert is_faithful(mono(CHAR, (1, 0), (2, 1)))
    assert not is_faithful(mono(CHAR, (2, 0), (0, 1)))
    with pytest.raises(PreconditionError):
        is_faithful(mono(CHAR, (1, 0)))


def test_dual_examples():
    assert dual(mono(CHAR, (1, 0), (0, 1))) == mono(COCHAR, (1, 0), (0, 1))
    assert dual(mono(CHAR, (1, 0), (1, 1))) == mono(COCHAR, (1, -1), (0, 1))
    with pytest.raises(PreconditionError):
        dual(mono(CHAR, (2, 0), (0, 1)))


@given(faithful_polynomials())
def test_dual_matches_sympy_inverse_transpose(h):
    assert dual(h) == dual_oracle(h)


@given(faithful_polynomials())
def test_dual_is_an_involution(h):
    assert dual(dual(h)) == h


@given(unimodular(3), st.permutations(range(3)))
def test_dual_independent_of_generator_order(cols, perm):
    h1 = P.monomial(3, CHAR, cols)
    h2 = P.monomial(3, CHAR, [cols[i] for i in perm]) * inversion_sign(perm)
    assert h1 == h2
    assert dual(h1) == dual(h2)


# boundary ----------------------------------------------------------------------

def test_boundary_examples():
    s1, s2, s3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert boundary(mono(COCHAR, s1)) == P.one(3, COCHAR)
    assert boundary(mono(COCHAR, s1, s2)) == mono(COCHAR, s2) - mono(COCHAR, s1)
    assert not boundary(boundary(mono(COCHAR, s1, s2, s3)))
    assert not boundary(P.one(3, COCHAR))
    with pytest.raises(PreconditionError):
        boundary(mono(CHAR, s1))


@given(polynomials())
def test_boundary_matches_expansion(h):
    assert boundary(h) == boundary_oracle(h)


@given(polynomials())
def test_boundary_squared_is_zero(h):
    assert not boundary(boundary(h))


# membership --------------------------------------------------------------------

def test_membership_examples():
    assert is_closed_faithful(TRIANGLE)
    assert not is_closed_faithful(mono(COCHAR, (1, 0), (0, 1)))
    assert is_closed_faithful(P.zero(2, COCHAR))
    assert is_torus_polynomial(dual(TRIANGLE))
    assert not is_torus_polynomial(mono(CHAR, (1, 0), (0, 1)))
    assert is_torus_polynomial(P.zero(2, CHAR))
    with pytest.raises(PreconditionError):
        is_torus_polynomial(TRIANGLE)


@given(faithful_polynomials())
def test_kn_iff_fkn_of_dual(h):
    assert is_torus_polynomial(h) == is_closed_faithful(dual(h))


@given(st.integers(0, 2**32))
def test_polygon_sums_are_closed(seed):
    import random

    h = random_closed_rank2(random.Random(seed))
    assert is_closed_faithful(h)
    assert is_torus_polynomial(dual(h))


# cone ----------------------------------------------------------------------------

def test_cone_examples():
    t = (1, 1)
    assert cone(P.one(2, COCHAR), t) == mono(COCHAR, t)
    assert boundary(mono(COCHAR, t)) == P.one(2, COCHAR)
    s1, s2 = (1, 0), (0, 1)
    h = mono(COCHAR, s2) - mono(COCHAR, s1)
    c = cone(h, t)
    assert c == mono(COCHAR, t, s2) - mono(COCHAR, t, s1)
    assert boundary(c) == h
    with pytest.raises(PreconditionError):
        cone(h, s1)
    with pytest.raises(PreconditionError):
        cone(mono(COCHAR, s1), t)


@given(polynomials(n=3), vectors(3, bound=9))
def test_cone_is_exactness_witness(h, t):
    cycle = boundary(h)
    if t in cycle.generators():
        return
    assert boundary(cone(cycle, t)) == cycle


# fixed point map and products --------------------------------------------------------

def test_fixed_point_map_examples():
    f = fixed_point_map(mono(CHAR, (1, 0), (0, 1)))
    assert f == CommutativeFixedPointData(2, [([(1, 0), (0, 1)], 1)])
    g = fixed_point_map(P(2, CHAR, [([(0, 1), (1, 0)], 1)]))
    assert g == CommutativeFixedPointData(2, [([(1, 0), (0, 1)], -1)])
    assert len(fixed_point_map(P.zero(2, CHAR))) == 0
    with pytest.raises(PreconditionError):
        fixed_point_map(mono(CHAR, (2, 0), (0, 1)))


@given(faithful_polynomials(), faithful_polynomials())
def test_fixed_point_map_injective(h1, h2):
    if h1.n == h2.n and fixed_point_map(h1) == fixed_point_map(h2):
        assert h1 == h2


def test_external_product_examples():
    h = mono(CHAR, (1, 0), (0, 1))
    assert external_product(h, P.one()) == h
    assert external_product(P.one(), h) == h
    seg = mono(COCHAR, (1,)) - mono(COCHAR, (-1,))
    sq = external_product(seg, seg)
    assert sq.n == 2 and len(sq) == 4
    assert sq == P(2, COCHAR, [([(a, 0), (0, b)], a * b) for a in (1, -1) for b in (1, -1)])
    assert is_closed_faithful(sq)
    with pytest.raises(PreconditionError):
        external_product(h, dual(h))


@given(faithful_polynomials(n=2), faithful_polynomials(n=2), faithful_polynomials(n=1),
       st.integers(-3, 3), st.integers(-3, 3))
def test_external_product_distributes(a, b, c, x, y):
    combo = linear_combine([x, y], [a, b])
    assert external_product(combo, c) == linear_combine(
        [x, y], [external_product(a, c), external_product(b, c)])
    assert external_product(c, combo) == linear_combine(
        [x, y], [external_product(c, a), external_product(c, b)])


def test_external_product_of_kernel_elements():
    seg = dual(mono(COCHAR, (1,)) - mono(COCHAR, (-1,)))
    tri = dual(TRIANGLE)
    assert is_torus_polynomial(external_product(seg, tri))
    assert is_torus_polynomial(external_product(tri, seg))


def test_polynomial_validation():
    with pytest.raises(PreconditionError):
        P(2, CHAR, [([(0, 0)], 1)])
    with pytest.raises(PreconditionError):
        P(2, "other")
    with pytest.raises(PreconditionError):
        P(2, CHAR, [([(1, 0, 0)], 1)])
