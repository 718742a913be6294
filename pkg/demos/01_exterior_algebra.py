"""Exterior polynomials over Z^n: canonical form, duality, boundary and the two membership tests."""
from torusbordism import jsonio
from torusbordism.exterior import (
    CHAR,
    COCHAR,
    ExteriorPolynomial,
    boundary,
    cone,
    dual,
    is_closed_faithful,
    is_torus_polynomial,
)


def show(label, h):
    print(f"{label:<28} {jsonio.dumps(jsonio.polynomial_to_json(h))}")


# generators are kept sorted, so swapping two of them flips the sign
e1, e2 = (1, 0), (0, 1)
show("e2 ^ e1", ExteriorPolynomial.monomial(2, CHAR, [e2, e1]))

# the triangle: three cocharacter monomials around a cycle
s = [(1, 0), (0, 1), (-1, -1)]
tri = ExteriorPolynomial(2, COCHAR, [((s[i], s[(i + 1) % 3]), 1) for i in range(3)])
show("triangle", tri)
show("d(triangle)", boundary(tri))
print("closed and faithful:", is_closed_faithful(tri))

# dual basis monomial by monomial moves it to the character side
h = dual(tri)
show("dual(triangle)", h)
print("torus polynomial:", is_torus_polynomial(h))
print("dual is an involution:", dual(h) == tri)

# a single vertex is not closed
lone = ExteriorPolynomial.monomial(2, COCHAR, [e1, e2])
show("d(e1 ^ e2)", boundary(lone))
print("single vertex is a torus polynomial:", is_torus_polynomial(dual(lone)))

# every cycle is a boundary: the cone on a cycle is an explicit preimage
cycle = boundary(lone)
c = cone(cycle, (1, 1))
show("cone((1,1), d(e1^e2))", c)
print("d(cone) == cycle:", boundary(c) == cycle)
