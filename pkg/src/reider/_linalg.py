"""Small exact linear algebra over the rationals.

Matrices are lists of rows; entries are converted to ``Fraction`` on entry.
Everything here is dense and cubic, which is plenty for intersection
matrices of exceptional configurations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def is_square(a: Sequence[Sequence]) -> bool:
    return all(len(row) == len(a) for row in a)


def is_symmetric(a: Sequence[Sequence]) -> bool:
    n = len(a)
    return is_square(a) and all(a[i][j] == a[j][i] for i in range(n) for j in range(i))


def submatrix(a: Sequence[Sequence], idx: Sequence[int]) -> Matrix:
    return [[Fraction(a[i][j]) for j in idx] for i in idx]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(u, v)), Fraction(0))


def matvec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [dot(row, v) for row in a]


def bilinear(a: Sequence[Sequence], u: Sequence, v: Sequence) -> Fraction:
    """``u^T a v``."""
    return dot(u, matvec(a, v))


def det(a: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = to_matrix(a)
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve ``a x = b`` for square nonsingular ``a``.

    Raises ``ZeroDivisionError`` if ``a`` is singular.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n] for row in m]


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    cols = [solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def leading_minors(a: Sequence[Sequence]) -> list[Fraction]:
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def is_negative_definite(a: Sequence[Sequence]) -> bool:
    """Sylvester's criterion applied to ``-a``."""
    if not a or not is_symmetric(a):
        return False
    return all(x > 0 for x in leading_minors([[-x for x in row] for row in a]))


def inertia(a: Sequence[Sequence]) -> tuple[int, int, int]:
    """Return ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix.

    Diagonalizes by congruence: pivot on a nonzero diagonal entry and pass to
    the Schur complement. When the whole diagonal vanishes, adding a basis
    vector to another creates a nonzero diagonal entry. Inertia is preserved
    throughout by Sylvester's law.
    """
    m = to_matrix(a)
    counts = [0, 0, 0]
    while m:
        n = len(m)
        i = next((k for k in range(n) if m[k][k] != 0), None)
        if i is None:
            pair = next(
                ((k, j) for k in range(n) for j in range(n) if m[k][j] != 0), None
            )
            if pair is None:
                counts[2] += n
                break
            k, j = pair
            # e_k -> e_k + e_j gives diagonal entry 2 m[k][j] != 0
            for c in range(n):
                m[k][c] += m[j][c]
            for r in range(n):
                m[r][k] += m[r][j]
            i = k
        p = m[i][i]
        counts[0 if p > 0 else 1] += 1
        rest = [k for k in range(n) if k != i]
        m = [[m[r][c] - m[r][i] * m[i][c] / p for c in rest] for r in rest]
    return counts[0], counts[1], counts[2]
