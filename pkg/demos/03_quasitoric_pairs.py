"""Quasitoric pairs: polytope plus characteristic matrix, their polynomials, products and connected sums."""
import random

from torusbordism.exterior import dual, external_product
from torusbordism.polytope import enumerate_vertices, simplex
from torusbordism.quasitoric import (
    check_star,
    connected_sum_pairs,
    product_pairs,
    quasitoric_polynomial,
    segment_pair,
    simplex_pair,
    torus_graph_of,
)
from torusbordism.sampling import random_sum_instance
from torusbordism.torusgraph import torus_polynomial

data = enumerate_vertices(simplex(3))
print("tetrahedron vertices:", [tuple(str(x) for x in p) for p in data.points])
print("positive facet orderings:", data.orderings)

q = simplex_pair(3)
print("(★) holds:", check_star(q))
g = quasitoric_polynomial(q)
print("monomials in its polynomial:", len(g))
print("graph polynomial is the dual:", torus_polynomial(torus_graph_of(q)) == dual(g))

# products multiply polynomials externally
sq = product_pairs(segment_pair(), segment_pair())
print("square characteristic matrix:", sq.matrix_rows)
print("product formula holds:", quasitoric_polynomial(sq) == external_product(
    quasitoric_polynomial(segment_pair()), quasitoric_polynomial(segment_pair())))

# glue two pairs at a pair of cancelling vertices
rng = random.Random(2)
q1, v, q2, w = random_sum_instance(rng, 3)
r = connected_sum_pairs(q1, v, q2, w)
print(f"facets {q1.m} + {q2.m} -> {r.m}, vertices {len(q1.base)} + {len(q2.base)} -> {len(r.base)}")
print("polynomial is additive:", quasitoric_polynomial(r) == quasitoric_polynomial(q1) + quasitoric_polynomial(q2))
