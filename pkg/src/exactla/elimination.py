"""Exact Gauss-Jordan elimination.

Pivots are the first nonzero entry found scanning each column downward, so
every result here is a deterministic function of the input.
"""
from __future__ import annotations

from typing import Sequence

from .field import Element, Field
from .matrix import Matrix, from_columns


def rref(A: Matrix) -> tuple[list[list[Element]], list[int]]:
    """Reduced row echelon form as mutable rows, plus the pivot columns."""
    F = A.field
    M = [list(r) for r in A.data]
    pivots: list[int] = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        p = next((i for i in range(r, A.rows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = F.inv(M[r][c])
        M[r] = [a * inv for a in M[r]]
        for i in range(A.rows):
            f = M[i][c]
            if i != r and f:
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def null_vector(A: Matrix) -> tuple[Element, ...] | None:
    """A nonzero x with Ax = 0, or None when the columns are independent.

    The first free column gets coefficient 1 and later free columns 0.
    """
    F = A.field
    M, pivots = rref(A)
    free = next((c for c in range(A.cols) if c not in pivots), None)
    if free is None:
        return None
    x = [F.zero] * A.cols
    x[free] = F.one
    for row, c in enumerate(pivots):
        x[c] = -M[row][free]
    return tuple(x)


def solve(A: Matrix, b: Sequence[Element]) -> tuple[Element, ...] | None:
    """Some x with Ax = b (free variables set to zero), or None if inconsistent."""
    F = A.field
    aug = Matrix(F, A.rows, A.cols + 1, [list(r) + [bi] for r, bi in zip(A.data, b)])
    M, pivots = rref(aug)
    if A.cols in pivots:
        return None
    x = [F.zero] * A.cols
    for row, c in enumerate(pivots):
        x[c] = M[row][A.cols]
    return tuple(x)


def independent(A: Matrix) -> bool:
    return rank(A) == A.cols


def in_span(F: Field, cols: Sequence[Sequence[Element]], v: Sequence[Element]) -> bool:
    if not cols:
        return not any(v)
    return solve(from_columns(F, cols), v) is not None
