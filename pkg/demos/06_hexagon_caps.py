"""A triangulated hexagon pattern in rank three, and a search for caps that split it into prisms."""
import random

from torusbordism.exterior import is_closed_faithful
from torusbordism.quasitoric import check_star, quasitoric_polynomial
from torusbordism.search import (
    cap_search,
    hexagon_polynomial,
    hexagonal_prism_pairs,
    min_support_search,
    random_hexagon_labels,
)

labels = random_hexagon_labels(random.Random(1))
h = hexagon_polynomial(labels)
print("labels:", labels)
print("closed and faithful:", is_closed_faithful(h), f"({len(h)} monomials)")

caps = cap_search(labels, 2)
print(f"{len(caps)} caps with entries in [-2, 2]")
if caps:
    prisms = hexagonal_prism_pairs(labels, caps[0])
    total = sum((quasitoric_polynomial(q) for q in prisms[1:]), quasitoric_polynomial(prisms[0]))
    print(f"{len(prisms)} prisms, all (★):", all(check_star(q) for q in prisms))
    print("prisms sum to the pattern:", total == h)

# a nonzero torus polynomial needs at least n + 1 fixed points
report = min_support_search(2, 1)
print(report.message)
print("smallest example has", len(report.witness), "monomials")
