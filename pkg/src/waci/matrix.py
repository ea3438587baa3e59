"""Dense matrices over Q as lists of lists of Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def congruent(g: Sequence[Sequence], t: Sequence[Sequence]) -> Matrix:
    """T^T G T."""
    return matmul(transpose(t), matmul(g, t))


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return [[Fraction(entries[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def block_diag(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    n, k = len(a), len(b)
    out = [[Fraction(0)] * (n + k) for _ in range(n + k)]
    for i in range(n):
        for j in range(n):
            out[i][j] = Fraction(a[i][j])
    for i in range(k):
        for j in range(k):
            out[n + i][n + j] = Fraction(b[i][j])
    return out


def is_symmetric(a: Sequence[Sequence]) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def _echelon(a: Sequence[Sequence]) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns, and the sign/scale-free swap count."""
    m = to_matrix(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    swaps = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            swaps += 1
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots, swaps


def rank(a: Sequence[Sequence]) -> int:
    if not a or not a[0]:
        return 0
    return len(_echelon(a)[1])


def det(a: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-valued Gaussian elimination."""
    m = to_matrix(a)
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / piv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + idrow for row, idrow in zip(to_matrix(a), identity(n))]
    red, pivots, _ = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def nullspace(a: Sequence[Sequence]) -> Matrix:
    """Basis (as column vectors, returned as a list of lists) of {x : a x = 0}."""
    cols = len(a[0])
    red, pivots, _ = _echelon(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def format_matrix(a: Sequence[Sequence]) -> list[list[str]]:
    return [[str(x) for x in row] for row in a]
