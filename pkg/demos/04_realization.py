"""Realizing closed faithful polynomials by pairs in ranks one and two, and adding pairs in higher rank."""
import random

from torusbordism.exterior import COCHAR, ExteriorPolynomial
from torusbordism.quasitoric import check_star, quasitoric_polynomial, simplex_pair, transform
from torusbordism.realization import add_pairs, realize_dim1, realize_dim2
from torusbordism.sampling import random_closed_rank2
from torusbordism.search import grid_torus_polynomial, tetrahedron_pair

seg = ExteriorPolynomial(1, COCHAR, [([(1,)], 1), ([(-1,)], -1)])
print("rank 1: -3 * segment needs", len(realize_dim1(seg * -3)), "segments")

h = random_closed_rank2(random.Random(8), cycles=2)
q = realize_dim2(h)
print(f"rank 2: {len(h)} monomials realized by a {q.m}-gon pair:", quasitoric_polynomial(q) == h)

# the three ways add_pairs can join two pairs
for name, matrix in [("cancelling vertex", ((0, 1, 0), (1, 0, 0), (0, 0, 1))),
                     ("one differing label", None),
                     ("no shared labels", ((1, 1, 0), (0, 1, 1), (1, 1, 1)))]:
    q1 = simplex_pair(3)
    q2 = q1 if matrix is None else transform(q1, matrix)
    trace = []
    r = add_pairs(q1, q2, trace)
    bridges = [t for t in trace if "bridge" in t]
    print(f"{name}: case {trace[0]['case']}, {len(bridges)} bridge(s), {r.m} facets,",
          "(★)" if check_star(r) else "no (★)")

# a triangulated 3-torus pattern is twice the tetrahedron pair
s = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
grid = grid_torus_polynomial(s)
t = tetrahedron_pair(s)
print("grid torus == 2 * tetrahedron:", grid == quasitoric_polynomial(t) * 2)
print("realized as one pair:", quasitoric_polynomial(add_pairs(t, t)) == grid)
