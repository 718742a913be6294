"""Free exterior algebra over the nonzero vectors of Z^n.

Generators are nonzero integer n-tuples.  A polynomial remembers which
lattice it lives in: the character lattice (``"char"``, the home of torus
polynomials) or the cocharacter lattice (``"cochar"``, the home of
quasitoric polynomials and of the boundary operator).

Monomials are stored in canonical form: generators in strictly increasing
lexicographic order, with the permutation sign folded into the coefficient.
"""
from __future__ import annotations

import itertools
from collections import Counter
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import PreconditionError
from .linalg import Vector, det, dual_basis, sort_with_sign

CHAR = "char"
COCHAR = "cochar"
SIDES = (CHAR, COCHAR)

Gens = tuple[Vector, ...]


def _other_side(side: str) -> str:
    return COCHAR if side == CHAR else CHAR


class ExteriorPolynomial:
    """An element of the exterior algebra on Z^n minus the origin.

    ``terms`` maps canonical generator tuples to nonzero integer
    coefficients.  Instances are immutable and hashable.

    >>> h = ExteriorPolynomial.monomial(2, CHAR, [(1, 0), (0, 1)])
    >>> dict(h.terms)
    {((0, 1), (1, 0)): -1}
    """

    __slots__ = ("n", "side", "_terms", "_hash")

    def __init__(self, n: int, side: str, terms: Mapping[Sequence, int] | Iterable = ()):
        if side not in SIDES:
            raise PreconditionError(f"side must be one of {SIDES}, got {side!r}")
        if n < 0:
            raise PreconditionError("rank must be non-negative")
        self.n = n
        self.side = side
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Gens, int] = {}
        for gens, coeff in items:
            gens = tuple(tuple(int(x) for x in g) for g in gens)
            for g in gens:
                if len(g) != n:
                    raise PreconditionError(f"generator {g} does not have rank {n}")
                if not any(g):
                    raise PreconditionError("the zero vector is not a generator")
            sign, key = sort_with_sign(gens)
            if sign == 0:
                continue
            acc[key] = acc.get(key, 0) + sign * int(coeff)
        self._terms = MappingProxyType({k: c for k, c in sorted(acc.items()) if c})
        self._hash = None

    # construction helpers ------------------------------------------------
    @classmethod
    def zero(cls, n: int, side: str) -> "ExteriorPolynomial":
        return cls(n, side)

    @classmethod
    def one(cls, n: int = 0, side: str = CHAR) -> "ExteriorPolynomial":
        """The empty monomial; in rank 0 this is the class of a point."""
        return cls(n, side, {(): 1})

    @classmethod
    def monomial(cls, n: int, side: str, gens: Sequence[Sequence[int]], coeff: int = 1):
        return cls(n, side, [(gens, coeff)])

    # basic protocol ------------------------------------------------------
    @property
    def terms(self) -> Mapping[Gens, int]:
        return self._terms

    def __iter__(self) -> Iterator[tuple[Gens, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorPolynomial):
            return NotImplemented
        return (self.n, self.side, dict(self._terms)) == (other.n, other.side, dict(other._terms))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.side, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"ExteriorPolynomial(n={self.n}, side={self.side!r}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for gens, c in self._terms.items():
            body = "^".join(str(g).replace(" ", "") for g in gens) or "1"
            parts.append(f"{c:+d}*{body}")
        return " ".join(parts)

    def _check_compatible(self, other: "ExteriorPolynomial") -> None:
        if not isinstance(other, ExteriorPolynomial):
            raise TypeError(f"expected ExteriorPolynomial, got {type(other).__name__}")
        if self.n != other.n:
            raise PreconditionError(f"rank mismatch: {self.n} vs {other.n}")
        if self.side != other.side:
            raise PreconditionError(f"side mismatch: {self.side} vs {other.side}")

    def __add__(self, other: "ExteriorPolynomial") -> "ExteriorPolynomial":
        self._check_compatible(other)
        return ExteriorPolynomial(self.n, self.side, itertools.chain(self, other))

    def __neg__(self) -> "ExteriorPolynomial":
        return ExteriorPolynomial(self.n, self.side, {g: -c for g, c in self})

    def __sub__(self, other: "ExteriorPolynomial") -> "ExteriorPolynomial":
        return self + (-other)

    def __mul__(self, k: int) -> "ExteriorPolynomial":
        if not isinstance(k, int):
            return NotImplemented
        return ExteriorPolynomial(self.n, self.side, {g: k * c for g, c in self})

    __rmul__ = __mul__

    # structure -----------------------------------------------------------
    def degrees(self) -> set[int]:
        return {len(g) for g in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def generators(self) -> set[Vector]:
        return {g for gens in self._terms for g in gens}

    def monomial_count(self, with_multiplicity: bool = False) -> int:
        if with_multiplicity:
            return sum(abs(c) for c in self._terms.values())
        return len(self._terms)


def _require_degree_n(h: ExteriorPolynomial, what: str) -> None:
    if not h.is_homogeneous(h.n):
        raise PreconditionError(f"{what} needs a homogeneous polynomial of degree n={h.n}")


def _require_side(h: ExteriorPolynomial, side: str, what: str) -> None:
    if h.side != side:
        raise PreconditionError(f"{what} is defined on the {side} side, got {h.side}")


def wedge(a: ExteriorPolynomial, b: ExteriorPolynomial) -> ExteriorPolynomial:
    a._check_compatible(b)
    terms = [(ga + gb, ca * cb) for ga, ca in a for gb, cb in b]
    return ExteriorPolynomial(a.n, a.side, terms)


def linear_combine(coeffs: Sequence[int], polys: Sequence[ExteriorPolynomial]) -> ExteriorPolynomial:
    if len(coeffs) != len(polys):
        raise PreconditionError("coefficient and polynomial counts differ")
    if not polys:
        raise PreconditionError("need at least one polynomial to fix rank and side")
    first = polys[0]
    for p in polys[1:]:
        first._check_compatible(p)
    terms = [(g, k * c) for k, p in zip(coeffs, polys) for g, c in p]
    return ExteriorPolynomial(first.n, first.side, terms)


def is_faithful(h: ExteriorPolynomial) -> bool:
    """Every monomial's generators form a Z-basis (determinant +-1)."""
    _require_degree_n(h, "faithfulness")
    return all(det(gens) in (1, -1) for gens in h.terms)


def dual(h: ExteriorPolynomial) -> ExteriorPolynomial:
    """Replace every monomial's basis by its dual basis; flips the side.

    For c * s_1 ^ ... ^ s_n the result is c * s_1* ^ ... ^ s_n* where the
    columns s_i* form the inverse transpose of [s_1 ... s_n].
    """
    _require_degree_n(h, "dual")
    terms = []
    for gens, c in h:
        if det(gens) not in (1, -1):
            raise PreconditionError(f"monomial {gens} is not unimodular")
        terms.append((dual_basis(gens), c))
    return ExteriorPolynomial(h.n, _other_side(h.side), terms)


def boundary(h: ExteriorPolynomial) -> ExteriorPolynomial:
    """The boundary d(s_1^...^s_k) = sum (-1)^(i+1) s_1^..^(omit s_i)^..^s_k.

    d(s) = 1 and d(1) = 0.  Only defined on the cocharacter side.
    """
    _require_side(h, COCHAR, "the boundary operator")
    terms = []
    for gens, c in h:
        for i in range(len(gens)):
            terms.append((gens[:i] + gens[i + 1:], c if i % 2 == 0 else -c))
    return ExteriorPolynomial(h.n, COCHAR, terms)


def is_closed_faithful(h: ExteriorPolynomial) -> bool:
    """Membership in the group of faithful cocharacter polynomials with d(h)=0."""
    _require_side(h, COCHAR, "closed-faithful membership")
    _require_degree_n(h, "closed-faithful membership")
    return is_faithful(h) and not boundary(h)


def is_torus_polynomial(h: ExteriorPolynomial) -> bool:
    """Membership in K_n: faithful character polynomial whose dual is closed.

    These are exactly the torus polynomials of oriented torus graphs.
    """
    _require_side(h, CHAR, "torus-polynomial membership")
    _require_degree_n(h, "torus-polynomial membership")
    return is_faithful(h) and not boundary(dual(h))


def cone(h: ExteriorPolynomial, t: Sequence[int]) -> ExteriorPolynomial:
    """Exactness witness: t ^ h, whose boundary is h when d(h) = 0."""
    _require_side(h, COCHAR, "cone")
    t = tuple(int(x) for x in t)
    if t in h.generators():
        raise PreconditionError(f"{t} already occurs in the polynomial")
    if boundary(h):
        raise PreconditionError("cone needs a cycle: d(h) != 0")
    return wedge(ExteriorPolynomial.monomial(h.n, COCHAR, [t]), h)


class CommutativeFixedPointData:
    """Integer combination of commutative products of characters.

    Keys are sorted tuples of character vectors (multisets).
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Iterable[tuple[Sequence[Vector], int]] = ()):
        self.n = n
        acc: Counter = Counter()
        for gens, c in terms:
            acc[tuple(sorted(tuple(g) for g in gens))] += c
        self._terms = MappingProxyType({k: c for k, c in sorted(acc.items()) if c})

    @property
    def terms(self) -> Mapping[Gens, int]:
        return self._terms

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommutativeFixedPointData):
            return NotImplemented
        return self.n == other.n and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"CommutativeFixedPointData(n={self.n}, {dict(self._terms)})"


def fixed_point_map(h: ExteriorPolynomial) -> CommutativeFixedPointData:
    """Send c * s_1^...^s_n to c * det[s_1..s_n] * s_1...s_n (commuting)."""
    _require_side(h, CHAR, "the fixed point map")
    _require_degree_n(h, "the fixed point map")
    if not is_faithful(h):
        raise PreconditionError("the fixed point map needs a faithful polynomial")
    return CommutativeFixedPointData(h.n, [(gens, c * det(gens)) for gens, c in h])


def embed(h: ExteriorPolynomial, offset: int, total_rank: int) -> ExteriorPolynomial:
    """Push generators into Z^total_rank at coordinates offset..offset+n-1."""
    if offset < 0 or offset + h.n > total_rank:
        raise PreconditionError("embedding does not fit")
    pad_l, pad_r = (0,) * offset, (0,) * (total_rank - offset - h.n)
    return ExteriorPolynomial(total_rank, h.side, [
        (tuple(pad_l + g + pad_r for g in gens), c) for gens, c in h
    ])


def external_product(h1: ExteriorPolynomial, h2: ExteriorPolynomial) -> ExteriorPolynomial:
    """Product in the graded ring: h1 on the first coordinates, h2 on the last."""
    if h1.side != h2.side:
        raise PreconditionError(f"side mismatch: {h1.side} vs {h2.side}")
    total = h1.n + h2.n
    return wedge(embed(h1, 0, total), embed(h2, h1.n, total))


# names used by the operation catalogue
wedge_product = wedge
membership_Kn = is_torus_polynomial
membership_fKn = is_closed_faithful
