"""Small exact linear algebra over Z and Q.

Vectors are tuples; a square matrix is passed as a sequence of *columns*,
matching the way the rest of the package thinks of a basis s_1, ..., s_n.
Everything here is exact; there is no floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import PreconditionError

Vector = tuple[int, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def sort_with_sign(items: Sequence) -> tuple[int, tuple]:
    """Sort `items` and return (parity of the sorting permutation, sorted).

    A repeated item gives sign 0.
    """
    items = list(items)
    k = len(items)
    sign = 1
    # insertion sort keeps the swap count (len <= rank, so quadratic is fine)
    for i in range(1, k):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, k):
        if items[i - 1] == items[i]:
            return 0, tuple(items)
    return sign, tuple(items)


def permutation_sign(order: Sequence, reference: Sequence) -> int:
    """Sign of the permutation taking `reference` to `order` (same elements)."""
    pos = {x: i for i, x in enumerate(reference)}
    sign, _ = sort_with_sign([pos[x] for x in order])
    return sign


def det(columns: Sequence[Sequence]) -> int | Fraction:
    """Determinant of the square matrix with the given columns.

    Integer input gives an int (fraction-free Bareiss); rational input gives
    a Fraction.  The empty matrix has determinant 1.
    """
    n = len(columns)
    if n == 0:
        return 1
    if any(len(c) != n for c in columns):
        raise PreconditionError(f"expected {n} vectors of length {n}")
    if n == 1:
        return columns[0][0]
    if n == 2:
        (a, c), (b, d) = columns
        return a * d - b * c
    if all(isinstance(x, int) for col in columns for x in col):
        return _bareiss(columns)
    return _det_rational(columns)


def _bareiss(columns: Sequence[Sequence[int]]) -> int:
    n = len(columns)
    m = [[columns[j][i] for j in range(n)] for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_rational(columns: Sequence[Sequence]) -> Fraction:
    n = len(columns)
    m = [[Fraction(columns[j][i]) for j in range(n)] for i in range(n)]
    result = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            result = -result
        result *= m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            if f:
                for c in range(k, n):
                    m[r][c] -= f * m[k][c]
    return result


def inverse_rows(columns: Sequence[Sequence]) -> list[list[Fraction]]:
    """Rows of the inverse of the matrix with the given columns."""
    n = len(columns)
    m = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(int(i == r)) for r in range(n)]
         for i in range(n)]
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            raise PreconditionError("singular matrix")
        m[k], m[pivot] = m[pivot], m[k]
        p = m[k][k]
        m[k] = [x / p for x in m[k]]
        for r in range(n):
            if r != k and m[r][k]:
                f = m[r][k]
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    return [row[n:] for row in m]


@lru_cache(maxsize=65536)
def dual_basis(columns: tuple[Vector, ...]) -> tuple[Vector, ...]:
    """Columns of (A^-1)^T for a unimodular integer A given by columns.

    The j-th returned vector pairs to 1 with columns[j] and to 0 with the
    others.
    """
    d = det(columns)
    if d not in (1, -1):
        raise PreconditionError(f"not unimodular (det = {d}): {columns}")
    rows = inverse_rows(columns)
    return tuple(tuple(int(x) for x in row) for row in rows)


def is_unimodular(columns: Sequence[Sequence[int]]) -> bool:
    return len(columns) == (len(columns[0]) if columns else 0) and det(columns) in (1, -1)


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve the square system rows @ x = rhs exactly; None if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            return None
        m[k], m[pivot] = m[pivot], m[k]
        p = m[k][k]
        m[k] = [x / p for x in m[k]]
        for r in range(n):
            if r != k and m[r][k]:
                f = m[r][k]
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    return tuple(m[i][n] for i in range(n))


def null_vector(rows: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """A nonzero vector spanning the kernel of an (n-1) x n matrix of rank n-1."""
    if not rows:
        return None
    n = len(rows[0])
    # generalized cross product: cofactors along a formal extra row
    vec = []
    for i in range(n):
        minor_cols = [tuple(row[j] for row in rows) for j in range(n) if j != i]
        vec.append((-1) ** i * det(minor_cols) if minor_cols else 1)
    if all(v == 0 for v in vec):
        return None
    return tuple(Fraction(v) for v in vec)


def matmul_columns(a_cols: Sequence[Vector], b_cols: Sequence[Vector]) -> tuple[Vector, ...]:
    """Columns of A @ B where both are given by columns."""
    n = len(a_cols[0]) if a_cols else 0
    return tuple(
        tuple(sum(a_cols[k][i] * b[k] for k in range(len(b))) for i in range(n))
        for b in b_cols
    )


def kernel_basis(rows: Sequence[Sequence], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows @ x = 0} via reduced row echelon form."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -m[i][free]
        basis.append(tuple(vec))
    return basis
