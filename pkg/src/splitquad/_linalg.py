"""Exact Gaussian elimination over Fractions for the small systems used here."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((row[k] * v[k] for k in range(len(v))), Fraction(0)) for row in a]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    m = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def column_basis(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Columns of ``a`` at pivot positions; a basis of its column space."""
    _, pivots = rref(a)
    return [[Fraction(row[j]) for row in a] for j in pivots]


def solve_affine(a: Sequence[Sequence], b: Sequence) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """All solutions of ``a @ s = b`` as (particular, null-space basis), or None."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    particular = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        particular[p] = m[i][n]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return particular, basis


def det(a: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(v) for v in row] for row in a]
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        result *= m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] / m[col][col]
            if f:
                m[i] = [vi - f * vc for vi, vc in zip(m[i], m[col])]
    return result
