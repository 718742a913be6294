"""The localized genus series: pole cancellation for torus polynomials, and failure for arbitrary data."""
import random

from torusbordism.exterior import CHAR, is_torus_polynomial
from torusbordism.localization import genus_at_one, laurent_check
from torusbordism.quasitoric import simplex_pair, torus_graph_of
from torusbordism.sampling import random_faithful
from torusbordism.torusgraph import sphere_graph

g = torus_graph_of(simplex_pair(2))
cert = laurent_check(g, trials=3, order=2, seed=1)
for r in cert.results:
    print("xi =", r.xi, "orders:", [sorted(x.coefficients().items()) for x in r.orders])
print("Laurent at every xi:", cert.passed)
print("genus of the triangle graph:", genus_at_one(g))
print("genus of the 3-sphere graph:", genus_at_one(sphere_graph(3)))

# random faithful data that is not a torus polynomial keeps its poles
rng = random.Random(4)
fails = 0
for i in range(20):
    while True:
        h = random_faithful(rng, 2, CHAR)
        if not is_torus_polynomial(h):
            break
    fails += not laurent_check(h, trials=5, seed=i).passed
print(f"{fails}/20 non-members fail the check")
