import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusbordism.errors import PreconditionError, SchemaError
from torusbordism.exterior import CHAR, COCHAR, ExteriorPolynomial, dual, is_torus_polynomial
from torusbordism.quasitoric import quasitoric_polynomial, simplex_pair, torus_graph_of
from torusbordism.sampling import corpus_graphs
from torusbordism.torusgraph import (
    Dart,
    TorusGraph,
    canceling_pairs,
    congruence_class,
    connected_sum_graphs,
    disjoint_union,
    find_orientation,
    graph_from_polynomial,
    is_orientation,
    is_prime,
    k4_graph,
    prime_reduce,
    sphere_graph,
    standard_fixture,
    torus_polynomial,
    validate_axial,
    vertex_monomial,
)

TRIANGLE = ExteriorPolynomial(2, COCHAR, [([(1, 0), (0, 1)], 1), ([(0, 1), (-1, -1)], 1),
                                          ([(-1, -1), (1, 0)], 1)])

CORPUS = corpus_graphs(random.Random(7), 60)


def triangle_graph():
    return torus_graph_of(simplex_pair(2))


def two_vertex(labels_a, labels_b, signs=(1, -1)):
    """Two vertices joined by len(labels_a) parallel edges."""
    n = len(labels_a[0])
    darts = []
    for i, (a, b) in enumerate(zip(labels_a, labels_b)):
        darts += [Dart(2 * i, 0, 2 * i + 1, a), Dart(2 * i + 1, 1, 2 * i, b)]
    return TorusGraph(n, {0: signs[0], 1: signs[1]}, darts)


# structure -----------------------------------------------------------------------

def test_structural_errors():
    with pytest.raises(SchemaError):
        TorusGraph(1, {0: 1, 1: 1}, [Dart(0, 0, 1, (1,)), Dart(1, 1, 2, (1,))])
    with pytest.raises(PreconditionError, match="loop"):
        TorusGraph(1, {0: 1}, [Dart(0, 0, 1, (1,)), Dart(1, 0, 0, (1,))])


def test_congruence_class_is_canonical():
    a = (2, -1, 3)
    for x in [(5, 1, 0), (0, 0, 7), (-3, 4, -2)]:
        r = congruence_class(x, a)
        for k in range(-3, 4):
            assert congruence_class(tuple(xi + k * ai for xi, ai in zip(x, a)), a) == r


# validation --------------------------------------------------------------------

def test_validate_examples():
    assert validate_axial(sphere_graph(3)).ok
    assert validate_axial(k4_graph()).ok
    bad = two_vertex([(1, 0), (2, 0)], [(1, 0), (2, 0)])
    report = validate_axial(bad)
    assert not report.ok and not report.basis


def test_validate_reports_valence_and_congruence():
    g = TorusGraph(2, {0: 1, 1: -1}, [Dart(0, 0, 1, (1, 0)), Dart(1, 1, 0, (1, 0))])
    with pytest.raises(PreconditionError, match="valence"):
        validate_axial(g)
    # across the (1, 0) edge the other labels (0, 1) and (1, -1) differ mod (1, 0)
    g = two_vertex([(1, 0), (0, 1)], [(1, 0), (1, -1)])
    report = validate_axial(g)
    assert report.basis and not report.congruence


def test_connectivity_requirement():
    g = disjoint_union(sphere_graph(2), sphere_graph(2))
    report = validate_axial(g)
    assert report.ok and not report.connected
    with pytest.raises(PreconditionError, match="components"):
        validate_axial(g, require_connected=True)


# orientation -------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sphere_orientation(n):
    g = find_orientation(sphere_graph(n).unoriented())
    assert g.vertices == {0: 1, 1: -1}


def test_k4_not_orientable():
    with pytest.raises(PreconditionError, match="non-orientable"):
        find_orientation(k4_graph())


def test_reversed_labels_orient_all_positive():
    g = two_vertex([(1,)], [(-1,)], signs=(None, None))
    assert find_orientation(g).vertices == {0: 1, 1: 1}
    tri = triangle_graph()
    assert all(tri.partner(d).label == tuple(-x for x in d.label) for d in tri.darts.values())
    assert set(find_orientation(tri.unoriented()).vertices.values()) == {1}


@pytest.mark.parametrize("kind,g", CORPUS[:30])
def test_orientation_rigid_up_to_global_sign(kind, g):
    for comp in g.components():
        sub = TorusGraph(g.n, {v: None for v in comp},
                         [d for d in g.darts.values() if d.vertex in comp])
        solved = find_orientation(sub)
        signs = {v: g.sigma(v) for v in comp}
        flip = signs[comp[0]]
        assert all(solved.sigma(v) * flip == signs[v] for v in comp)
    assert torus_polynomial(g.reversed_orientation()) == -torus_polynomial(g)


# polynomials -------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sphere_polynomial_vanishes(n):
    assert not torus_polynomial(sphere_graph(n))


def test_equal_label_segment_vanishes():
    assert not torus_polynomial(two_vertex([(1,)], [(1,)]))


def test_rank_one_sign_rule():
    # opposite labels, both signs +1: the CP^1 graph gives t - (-t) as +-a per vertex
    g = two_vertex([(1,)], [(-1,)], signs=(1, 1))
    assert torus_polynomial(g) == ExteriorPolynomial(1, CHAR, [([(1,)], 1), ([(-1,)], -1)])


def test_triangle_graph_is_dual_of_pair_polynomial():
    q = simplex_pair(2)
    assert quasitoric_polynomial(q) == TRIANGLE
    assert torus_polynomial(triangle_graph()) == dual(TRIANGLE)


def test_disjoint_union_adds():
    g1, g2 = CORPUS[0][1], CORPUS[5][1]
    if g1.n == g2.n:
        assert torus_polynomial(disjoint_union(g1, g2)) == torus_polynomial(g1) + torus_polynomial(g2)
    t = triangle_graph()
    assert torus_polynomial(disjoint_union(t, t)) == torus_polynomial(t) * 2


# prime reduction and connected sums ---------------------------------------------------

def test_prime_reduce_examples():
    assert len(prime_reduce(sphere_graph(3)).vertices) == 0
    t = triangle_graph()
    assert prime_reduce(t) == t
    mixed = disjoint_union(sphere_graph(2), t)
    reduced = prime_reduce(mixed)
    assert len(reduced.vertices) == 3
    assert torus_polynomial(reduced) == torus_polynomial(t)


@pytest.mark.parametrize("kind,g", CORPUS)
def test_prime_reduce_invariants(kind, g):
    r = prime_reduce(g)
    assert torus_polynomial(r) == torus_polynomial(g)
    assert is_prime(r)
    assert len(r.vertices) == torus_polynomial(r).monomial_count(with_multiplicity=True)
    assert validate_axial(r).ok and is_orientation(r)


def _cancels(g1, p, g2, q):
    (k1, c1), (k2, c2) = vertex_monomial(g1, p), vertex_monomial(g2, q)
    return k1 == k2 and c1 + c2 == 0


def test_connected_sum_with_sphere_keeps_polynomial():
    t = triangle_graph()
    s = sphere_graph(2)
    pairs = [(p, q) for p in t.vertices for q in s.vertices if _cancels(t, p, s, q)]
    assert pairs
    p, q = pairs[0]
    g = connected_sum_graphs(t, p, s, q)
    assert torus_polynomial(g) == torus_polynomial(t)
    assert validate_axial(g).ok and is_orientation(g)


def test_triangle_plus_mirror_is_zero():
    t = triangle_graph()
    m = t.reversed_orientation()
    g = connected_sum_graphs(t, 0, m, 0)
    assert not torus_polynomial(g)
    assert len(g.vertices) == 4


def test_connected_sum_requires_cancellation():
    t = triangle_graph()
    with pytest.raises(PreconditionError):
        connected_sum_graphs(t, 0, t, 0)


def test_canceling_pairs_sorted():
    g = disjoint_union(sphere_graph(2), sphere_graph(2))
    assert canceling_pairs(g) == sorted(canceling_pairs(g))
    assert (0, 1) in canceling_pairs(g)


# reconstruction -----------------------------------------------------------------

def test_graph_from_polynomial_examples():
    g = graph_from_polynomial(dual(TRIANGLE))
    assert len(g.vertices) == 3 and len(g.darts) == 6
    assert g.is_connected()
    assert not graph_from_polynomial(ExteriorPolynomial(2, CHAR)).vertices
    h = dual(TRIANGLE) * 2
    g2 = graph_from_polynomial(h)
    assert len(g2.vertices) == 6
    stars = sorted(tuple(sorted(g2.star_labels(v))) for v in g2.vertices)
    assert stars[0] == stars[1]
    assert torus_polynomial(g2) == h


def test_graph_from_polynomial_rejects_non_members():
    with pytest.raises(PreconditionError):
        graph_from_polynomial(ExteriorPolynomial.monomial(2, CHAR, [(1, 0), (0, 1)]))


@pytest.mark.parametrize("kind,g", CORPUS)
def test_round_trip(kind, g):
    h = torus_polynomial(g)
    assert validate_axial(g).ok and is_orientation(g)
    assert is_torus_polynomial(h)
    back = graph_from_polynomial(h)
    assert validate_axial(back).ok and is_orientation(back)
    assert torus_polynomial(back) == h


@pytest.mark.parametrize("kind,g", CORPUS)
def test_minimum_support(kind, g):
    h = torus_polynomial(g)
    if h:
        assert len(h) >= g.n + 1


@given(st.sampled_from(range(len(CORPUS))))
def test_graph_from_polynomial_is_deterministic(i):
    h = torus_polynomial(CORPUS[i][1])
    assert graph_from_polynomial(h) == graph_from_polynomial(h)


# fixtures ------------------------------------------------------------------------

def test_standard_fixtures():
    s1 = standard_fixture("sphere", 1)
    assert len(s1.vertices) == 2 and len(s1.darts) == 2
    s3 = standard_fixture("sphere", 3)
    assert len(s3.darts) == 6
    with pytest.raises(PreconditionError):
        find_orientation(standard_fixture("k4", 3))
    with pytest.raises(PreconditionError):
        standard_fixture("k4", 2)
    with pytest.raises(PreconditionError):
        standard_fixture("torus", 2)
