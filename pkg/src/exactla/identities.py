"""Block identities satisfied by companion matrices.

With A = companion(c) split as [[0, R], [S, M]] after the first row and
column, the powers of A and a weighted sum of the rank-one products
M^j S R M^l have closed forms.  Each function returns the two sides so a
caller can compare them exactly.
"""
from __future__ import annotations

from typing import Sequence

from .matrix import Matrix, identity, matrix_powers, mul, power, scale, split2x2, zeros


def _parts(A: Matrix):
    _, R, S, M = split2x2(A, 1)
    Mp = [identity(A.field, M.rows)] + matrix_powers(M, A.rows)
    return R, S, M, Mp


def power_blocks(A: Matrix, i: int) -> tuple[tuple[Matrix, ...], tuple[Matrix, ...]]:
    """Blocks of A^(i+1) and the closed form
    [[0, R M^i], [M^i S, sum_{j<i} M^j S R M^(i-1-j) + M^(i+1)]].

    The closed form is exact for 1 <= i <= k-2.  For i = k-1 the three
    non-corner blocks still agree but the corner is -c_k (see
    :func:`leading_scalar`).
    """
    R, S, M, Mp = _parts(A)
    actual = split2x2(power(A, i + 1), 1)
    F = A.field
    SR = mul(S, R)
    lower_right = Mp[i + 1]
    for j in range(i):
        lower_right = lower_right + mul(mul(Mp[j], SR), Mp[i - 1 - j])
    predicted = (zeros(F, 1, 1), mul(R, Mp[i]), mul(Mp[i], S), lower_right)
    return actual, predicted


def leading_scalar(A: Matrix, i: int):
    """The (1, 1) entry w_(i+1) of A^(i+1).

    It vanishes for 1 <= i <= k-2.  At i = k-1 it equals R M^(k-2) S = -c_k,
    so the zero corner of the block formula fails there whenever c_k != 0.
    """
    return power(A, i + 1).data[0][0]


def corner_value(A: Matrix, i: int):
    """R M^(i-1) S, the value the recursion for w_(i+1) actually produces."""
    R, S, M, Mp = _parts(A)
    return mul(mul(R, Mp[i - 1]), S).data[0][0]


def weighted_rank_one_sum(A: Matrix, coeffs: Sequence) -> tuple[Matrix, Matrix]:
    """sum_{i=2..k} c_(k-i) sum_{j=0..i-2} M^j S R M^(i-2-j) against -c_k I.

    ``coeffs`` is (c_1, ..., c_k) with c_0 = 1 implied; needs k >= 2.
    """
    F = A.field
    c = [F.one] + [F.coerce(x) for x in coeffs]
    k = len(c) - 1
    R, S, M, Mp = _parts(A)
    SR = mul(S, R)
    total = zeros(F, k - 1, k - 1)
    for i in range(2, k + 1):
        inner = zeros(F, k - 1, k - 1)
        for j in range(i - 1):
            inner = inner + mul(mul(Mp[j], SR), Mp[i - 2 - j])
        total = total + scale(c[k - i], inner)
    return total, scale(-c[k], identity(F, k - 1))
