"""Exact univariate rational functions with integer coefficients.

Polynomial arithmetic is delegated to python-flint's ``fmpz_poly``; this
module only fixes the reduced form used throughout: value = z^shift * num /
den with gcd(num, den) = 1, num(0) != 0, den(0) != 0 and den having a
positive leading coefficient.
"""
from __future__ import annotations

from fractions import Fraction

from flint import fmpz_poly

from .errors import PreconditionError


def monomial(coeff: int, exponent: int) -> fmpz_poly:
    """coeff * z^exponent as a polynomial (exponent >= 0)."""
    return fmpz_poly([0] * exponent + [coeff])


def one_minus_power(a: int) -> fmpz_poly:
    """1 - z^a for a >= 1."""
    return fmpz_poly([1] + [0] * (a - 1) + [-1])


def _low_order(p: fmpz_poly) -> int:
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    return 0


class UnivariateLaurentRational:
    """A reduced quotient z^shift * num / den."""

    __slots__ = ("shift", "num", "den")

    def __init__(self, num: fmpz_poly, den: fmpz_poly, shift: int = 0):
        num, den = fmpz_poly(num), fmpz_poly(den)
        if den.is_zero():
            raise PreconditionError("zero denominator")
        if num.is_zero():
            self.shift, self.num, self.den = 0, fmpz_poly([0]), fmpz_poly([1])
            return
        k = _low_order(num)
        shift += k
        num = num.right_shift(k) if k else num
        k = _low_order(den)
        shift -= k
        den = den.right_shift(k) if k else den
        g = num.gcd(den)
        if not g.is_one():
            num, den = num // g, den // g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        self.shift, self.num, self.den = shift, num, den

    @property
    def is_laurent(self) -> bool:
        return self.den.is_one()

    def coefficients(self) -> dict[int, int]:
        """Exponent -> coefficient; only for Laurent polynomials."""
        if not self.is_laurent:
            raise PreconditionError("not a Laurent polynomial")
        return {self.shift + i: int(c) for i, c in enumerate(self.num.coeffs()) if c != 0}

    def at_one(self) -> Fraction:
        d = int(self.den(1))
        if d == 0:
            raise PreconditionError("pole at z = 1")
        return Fraction(int(self.num(1)), d)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def to_json(self) -> dict:
        return {"shift": self.shift,
                "num": [int(c) for c in self.num.coeffs()] or [0],
                "den": [int(c) for c in self.den.coeffs()]}

    def __eq__(self, other):
        if not isinstance(other, UnivariateLaurentRational):
            return NotImplemented
        return (self.shift, self.num, self.den) == (other.shift, other.num, other.den)

    def __hash__(self):
        return hash((self.shift, tuple(self.num.coeffs()), tuple(self.den.coeffs())))

    def __repr__(self):
        return f"UnivariateLaurentRational(z^{self.shift} * ({self.num}) / ({self.den}))"
