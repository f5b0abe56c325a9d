"""Characteristic polynomials and what follows from them.

Two algorithms compute det(xI - A):

* :func:`csanky` turns Newton's power-sum recurrence into a unit
  lower-triangular system and solves it with a block-recursive inverse.  It
  divides by 1..n, so it needs characteristic 0 or larger than n.
* :func:`berkowitz` multiplies the Toeplitz matrices built from A and its
  trailing principal submatrices.  It never divides and works over any field.

:func:`charpoly_oracle` expands the determinant by cofactors over the
polynomial ring and is the ground truth for small n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (CharacteristicTooSmall, NotSquare, NotTriangular, Singular,
                     SingularDiagonal, TooLarge)
from .field import GF, Element, Field, GFElement, Q
from .matrix import (Matrix, block2x2, chain_product, identity, is_lower_triangular,
                     is_upper_triangular, matrix_powers, mul, scale, split2x2, sub,
                     submatrix, trace, zeros)
from .poly import Poly

ORACLE_MAX_N = 8
ALGORITHMS = ("csanky", "berkowitz", "oracle")


@dataclass(frozen=True)
class CharPoly:
    """Monic det(xI - A); equality ignores which algorithm produced it."""

    poly: Poly
    n: int
    provenance: str = field(default="oracle", compare=False)

    def __post_init__(self):
        if self.poly.degree != self.n or not self.poly.is_monic():
            raise ValueError(f"not a monic degree-{self.n} polynomial: {self.poly}")

    @property
    def coeffs(self) -> tuple:
        return self.poly.coeffs

    def __str__(self):
        return str(self.poly)


def _require_square(A: Matrix) -> int:
    if not A.is_square:
        raise NotSquare(f"expected a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def _require_divisible(F: Field, n: int) -> None:
    p = F.characteristic
    if p != 0 and p <= n:
        raise CharacteristicTooSmall(
            f"{F} has characteristic {p} <= n = {n}; Csanky divides by 1..{n}")


# -- Newton / Csanky ---------------------------------------------------------

def newton_coeffs(A: Matrix) -> tuple[Element, ...]:
    """s_0..s_n from s_k = (1/k) sum_{i=1..k} (-1)^(i-1) s_(k-i) tr(A^i)."""
    n = _require_square(A)
    F = A.field
    _require_divisible(F, n)
    traces = [trace(P) for P in matrix_powers(A, n)]
    s = [F.one]
    for k in range(1, n + 1):
        acc = F.zero
        for i in range(1, k + 1):
            term = s[k - i] * traces[i - 1]
            acc = acc + term if i % 2 else acc - term
        s.append(acc * F.inv(F.from_integer(k)))
    return tuple(s)


def to_charpoly(s, provenance: str = "newton") -> CharPoly:
    """s_0 x^n - s_1 x^(n-1) + ... +- s_n."""
    s = list(s)
    n = len(s) - 1
    coeffs = [None] * (n + 1)
    for i, si in enumerate(s):
        coeffs[n - i] = si if i % 2 == 0 else -si
    F = _field_of(s[0])
    return CharPoly(Poly(F, coeffs), n, provenance)


def _field_of(a: Element) -> Field:
    return GF(a.p) if isinstance(a, GFElement) else Q


def csanky_system(A: Matrix, mode: str = "sequential", parallel: bool = False) -> tuple[Matrix, Matrix]:
    """The strictly lower-triangular T and column b with s = T s + b.

    T[k, j] = (-1)^(k-j-1) tr(A^(k-j)) / k for j < k and
    b[k] = (-1)^(k-1) tr(A^k) / k (1-based k, j over s_1..s_n).
    """
    n = _require_square(A)
    F = A.field
    _require_divisible(F, n)
    traces = [trace(P) for P in matrix_powers(A, n, mode, parallel)]
    inv_k = [None] + [F.inv(F.from_integer(k)) for k in range(1, n + 1)]
    zero = F.zero
    T = [[zero] * n for _ in range(n)]
    b = []
    for k in range(1, n + 1):
        for j in range(1, k):
            t = traces[k - j - 1] * inv_k[k]
            T[k - 1][j - 1] = t if (k - j - 1) % 2 == 0 else -t
        t = traces[k - 1] * inv_k[k]
        b.append([t if (k - 1) % 2 == 0 else -t])
    return Matrix(F, n, n, T), Matrix(F, n, 1, b)


def csanky(A: Matrix, mode: str = "sequential", parallel: bool = False) -> CharPoly:
    n = _require_square(A)
    F = A.field
    if n == 0:
        return CharPoly(Poly(F, [1]), 0, "csanky")
    T, b = csanky_system(A, mode, parallel)
    s = mul(triangular_inverse(sub(identity(F, n), T)), b)
    return to_charpoly([F.one] + list(s.column(0)), "csanky")


def triangular_inverse(C: Matrix) -> Matrix:
    """Inverse of a lower-triangular matrix with nonzero diagonal.

    Splits at ceil(k/2): [[C1, 0], [E, C2]]^-1 = [[C1^-1, 0], [-C2^-1 E C1^-1, C2^-1]].
    """
    k = _require_square(C)
    if not is_lower_triangular(C):
        raise NotTriangular("triangular_inverse needs a lower-triangular matrix")
    if any(not C.data[i][i] for i in range(k)):
        raise SingularDiagonal("zero on the diagonal")
    return _tri_inv(C)


def _tri_inv(C: Matrix) -> Matrix:
    k = C.rows
    F = C.field
    if k == 1:
        return Matrix(F, 1, 1, [[F.inv(C.data[0][0])]])
    h = (k + 1) // 2
    C1, _, E, C2 = split2x2(C, h)
    C1i, C2i = _tri_inv(C1), _tri_inv(C2)
    lower = scale(-1, mul(mul(C2i, E), C1i))
    return block2x2(C1i, zeros(F, h, k - h), lower, C2i)


def triangular_charpoly(C: Matrix) -> CharPoly:
    n = _require_square(C)
    if not (is_lower_triangular(C) or is_upper_triangular(C)):
        raise NotTriangular("matrix is neither upper- nor lower-triangular")
    return CharPoly(Poly.from_roots(C.field, (C.data[i][i] for i in range(n))), n, "triangular")


# -- Berkowitz ---------------------------------------------------------------

def berkowitz_column(A: Matrix) -> Matrix:
    """The (n+1) x n lower-triangular Toeplitz matrix for one Berkowitz step.

    Its first column is (1, -a11, -RS, -RMS, ..., -RM^(n-2)S) where
    A = [[a11, R], [S, M]].
    """
    n = _require_square(A)
    F = A.field
    col = [F.one, -A.data[0][0]]
    if n > 1:
        _, R, S, M = split2x2(A, 1)
        w = S
        for t in range(n - 1):
            col.append(-mul(R, w).data[0][0])
            if t < n - 2:
                w = mul(M, w)
    zero = F.zero
    return Matrix(F, n + 1, n, [[col[r - c] if r >= c else zero for c in range(n)]
                                for r in range(n + 1)])


def berkowitz_columns(A: Matrix) -> list[Matrix]:
    """C_1, ..., C_n for A and its trailing principal submatrices."""
    n = _require_square(A)
    return [berkowitz_column(submatrix(A, i, n, i, n)) for i in range(n)]


def berkowitz(A: Matrix, mode: str = "sequential", parallel: bool = False) -> CharPoly:
    """Division-free characteristic polynomial.

    ``sequential`` applies C_1 ... C_n right to left as matrix-vector
    products; ``tree`` forms the same product as a balanced binary tree.
    """
    n = _require_square(A)
    F = A.field
    if n == 0:
        return CharPoly(Poly(F, [1]), 0, "berkowitz")
    p = chain_product(berkowitz_columns(A), mode, parallel)
    descending = p.column(0)
    return CharPoly(Poly(F, reversed(descending)), n, "berkowitz")


# -- brute-force oracle ------------------------------------------------------

def charpoly_oracle(A: Matrix) -> CharPoly:
    """det(xI - A) by cofactor expansion in Poly arithmetic (n <= 8)."""
    n = _require_square(A)
    if n > ORACLE_MAX_N:
        raise TooLarge(f"cofactor oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    F = A.field
    if n == 0:
        return CharPoly(Poly(F, [1]), 0, "oracle")
    xI_A = [[Poly(F, [-A.data[i][j], 1] if i == j else [-A.data[i][j]]) for j in range(n)]
            for i in range(n)]
    zero = Poly(F)

    # Laplace along row `r`, over the columns still available in `mask`.
    @lru_cache(maxsize=None)
    def minor(r: int, mask: int) -> Poly:
        if r == n:
            return Poly(F, [1])
        acc = zero
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                e = xI_A[r][j]
                if not e.is_zero():
                    term = e * minor(r + 1, mask & ~(1 << j))
                    acc = acc + term if sign > 0 else acc - term
                sign = -sign
        return acc

    return CharPoly(minor(0, (1 << n) - 1), n, "oracle")


# -- derived quantities ------------------------------------------------------

def charpoly(A: Matrix, alg: str = "berkowitz") -> CharPoly:
    if alg == "berkowitz":
        return berkowitz(A)
    if alg == "csanky":
        return csanky(A)
    if alg == "oracle":
        return charpoly_oracle(A)
    raise ValueError(f"unknown algorithm {alg!r}")


def determinant(A: Matrix, alg: str = "berkowitz") -> Element:
    """(-1)^n p(0), since p(0) = det(-A)."""
    return _det_from(charpoly(A, alg))


def _det_from(cp: CharPoly) -> Element:
    c0 = cp.poly.coeff(0)
    return c0 if cp.n % 2 == 0 else -c0


def adjoint(A: Matrix, alg: str = "berkowitz") -> Matrix:
    """(-1)^(n+1) (A^(n-1) + p_(n-1) A^(n-2) + ... + p_1 I), by Horner."""
    _require_square(A)
    return _adj_from(charpoly(A, alg), A)


def _adj_from(cp: CharPoly, A: Matrix) -> Matrix:
    n = A.rows
    F = A.field
    I = identity(F, n)
    acc = zeros(F, n, n)
    for c in reversed(cp.coeffs[1:]):
        acc = mul(acc, A) + scale(c, I)
    return acc if (n + 1) % 2 == 0 else -acc


def inverse(A: Matrix, alg: str = "berkowitz") -> Matrix:
    """adj(A) / det(A); raises :class:`Singular` when det(A) = 0."""
    _require_square(A)
    cp = charpoly(A, alg)
    d = _det_from(cp)
    if not d:
        raise Singular("determinant is zero")
    return scale(A.field.inv(d), _adj_from(cp, A))


__all__ = [
    "ALGORITHMS", "CharPoly", "adjoint", "berkowitz", "berkowitz_column", "berkowitz_columns",
    "charpoly", "charpoly_oracle", "csanky", "csanky_system", "determinant", "inverse",
    "newton_coeffs", "to_charpoly", "triangular_charpoly", "triangular_inverse",
]
