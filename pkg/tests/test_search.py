import itertools
import random

import pytest

from torusbordism.errors import PreconditionError
from torusbordism.exterior import CHAR, ExteriorPolynomial, is_closed_faithful, is_torus_polynomial
from torusbordism.linalg import det
from torusbordism.quasitoric import check_star, quasitoric_polynomial
from torusbordism.search import (
    HEXAGON_CYCLES,
    cap_search,
    faithful_monomials,
    hexagon_polynomial,
    hexagonal_prism_pairs,
    min_support_search,
    random_hexagon_labels,
)


def test_faithful_monomials_rank2_bound1():
    monos = faithful_monomials(2, 1)
    # 8 nonzero vectors; count unordered pairs with det +-1 directly
    vecs = [v for v in itertools.product((-1, 0, 1), repeat=2) if any(v)]
    expected = sum(1 for a, b in itertools.combinations(vecs, 2)
                   if a[0] * b[1] - a[1] * b[0] in (1, -1))
    assert len(monos) == expected == 20


def test_min_support_rank2():
    report = min_support_search(2, 1)
    assert report.counterexample is None
    assert report.message == "no nonzero K_2 element with ≤ 2 monomials (entries in [-1,1])"
    w = report.witness
    assert w is not None and len(w) == 3 and is_torus_polynomial(w)


def test_min_support_agrees_with_coefficient_enumeration():
    """Literal search: every nonzero combination of <= 2 monomials, coefficients in [-3, 3]."""
    monos = faithful_monomials(2, 1)
    coeffs = [c for c in range(-3, 4) if c]
    for k in (1, 2):
        for support in itertools.combinations(monos, k):
            for cs in itertools.product(coeffs, repeat=k):
                h = ExteriorPolynomial(2, CHAR, list(zip(support, cs)))
                assert not is_torus_polynomial(h)


def test_min_support_too_small_bound_finds_elements():
    # with room for n + 1 monomials the search does find kernel elements
    report = min_support_search(2, 1, max_support=3, witness=False)
    assert report.counterexample is not None
    assert is_torus_polynomial(report.counterexample)


def test_min_support_rejects_bad_input():
    with pytest.raises(PreconditionError):
        min_support_search(0, 1)


# hexagon example ------------------------------------------------------------------

def test_hexagon_labels_and_caps():
    labels = random_hexagon_labels(random.Random(1))
    assert labels is not None and len(set(labels)) == 9
    h = hexagon_polynomial(labels)
    assert is_closed_faithful(h)
    caps = cap_search(labels, 2)
    for cap in caps:
        for cycle in HEXAGON_CYCLES.values():
            for i, j in zip(cycle, cycle[1:] + cycle[:1]):
                assert det((cap, labels[i], labels[j])) in (1, -1)


def test_hexagonal_prisms_sum_to_polynomial():
    labels = random_hexagon_labels(random.Random(1))
    caps = cap_search(labels, 2)
    assert caps
    prisms = hexagonal_prism_pairs(labels, caps[0])
    assert all(check_star(q) for q in prisms)
    total = sum((quasitoric_polynomial(q) for q in prisms[1:]), quasitoric_polynomial(prisms[0]))
    assert total == hexagon_polynomial(labels)
