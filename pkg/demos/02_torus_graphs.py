"""Torus graphs: validation, orientation, the torus polynomial and the round trip back to a graph."""
from torusbordism import jsonio
from torusbordism.cli import emit_dot
from torusbordism.errors import PreconditionError
from torusbordism.exterior import is_torus_polynomial
from torusbordism.quasitoric import simplex_pair, torus_graph_of
from torusbordism.torusgraph import (
    find_orientation,
    graph_from_polynomial,
    k4_graph,
    prime_reduce,
    sphere_graph,
    torus_polynomial,
    validate_axial,
)

# two vertices joined by n edges: the two fixed points cancel
for n in range(1, 5):
    print(f"sphere n={n}: torus polynomial is zero:", not torus_polynomial(sphere_graph(n)))
print(emit_dot(sphere_graph(3)))

# K4 with opposite edges sharing a label satisfies the axioms but has no orientation
k4 = k4_graph()
print("K4 axial report ok:", validate_axial(k4).ok)
try:
    find_orientation(k4)
except PreconditionError as exc:
    print("K4:", exc)

# the triangle graph of the projective plane
g = torus_graph_of(simplex_pair(2))
h = torus_polynomial(g)
print("triangle polynomial:", jsonio.dumps(jsonio.polynomial_to_json(h)))
print("in K_2:", is_torus_polynomial(h))

# rebuild a graph from the polynomial alone
back = graph_from_polynomial(h)
print("rebuilt graph has the same polynomial:", torus_polynomial(back) == h)
print("prime reduction of the sphere leaves", len(prime_reduce(sphere_graph(2)).vertices), "vertices")
print(emit_dot(g))
