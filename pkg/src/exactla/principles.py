"""Constructive witnesses for the classical matrix principles.

Each function builds the object whose existence a principle asserts: a
kernel vector for a dependent family, the Krylov polynomial of a standard
basis vector, an invariant block form, an annihilating polynomial, an
inverse or zero divisor, a Steinitz exchange, and the list of powers read
off from an inverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .charpoly import adjoint, berkowitz, determinant, inverse, triangular_inverse
from .elimination import independent, null_vector, rank, solve
from .errors import BadIndex, NotIndependent, NotSquare, NotTotal
from .matrix import (Matrix, column_vector, from_columns, hstack, identity, mul, scale,
                     submatrix, transpose, unit_vector, vec, zeros)
from .poly import Poly, eval_matrix

KERNEL_VECTOR = "KernelVector"
INVERSE = "Inverse"
ZERO_DIVISOR = "ZeroDivisor"
ANNIHILATING_POLY = "AnnihilatingPoly"
EXCHANGE_SET = "ExchangeSet"
POWER_LIST = "PowerList"


@dataclass(frozen=True)
class Witness:
    kind: str
    payload: Any


class _Independent:
    """Returned by :func:`kernel_vector` when no dependence exists."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Independent"

    def __bool__(self):
        return False


Independent = _Independent()


@dataclass(frozen=True)
class KrylovResult:
    k: int
    basis: Matrix
    g: Poly


@dataclass(frozen=True)
class BlockForm:
    """P A^t P^-1 = [[W, 0], [*, E]].

    ``Q`` holds the extended Krylov basis as columns; Q^-1 A Q is the same
    block form transposed, i.e. [[W^t, *], [0, E^t]].  P = Q^t.
    """

    P: Matrix
    W: Matrix
    E: Matrix
    k: int
    g: Poly
    Q: Matrix
    block: Matrix


def _square(A: Matrix) -> int:
    if not A.is_square:
        raise NotSquare(f"expected a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def kernel_vector(V: Matrix):
    """Nonzero x with Vx = 0 as a column, or :data:`Independent`."""
    x = null_vector(V)
    if x is None:
        return Independent
    return Witness(KERNEL_VECTOR, column_vector(V.field, x))


def krylov_local_poly(A: Matrix, i: int) -> KrylovResult:
    n = _square(A)
    if not 1 <= i <= n:
        raise BadIndex(f"index {i} outside 1..{n}")
    F = A.field
    vecs = [unit_vector(F, n, i)]
    while True:
        nxt = mul(A, vecs[-1])
        basis = hstack(*vecs)
        a = solve(basis, nxt.column(0))
        if a is not None:
            k = len(vecs)
            g = Poly(F, [-c for c in a] + [1])
            return KrylovResult(k, basis, g)
        vecs.append(nxt)


def extend_to_basis(B: Matrix) -> Matrix:
    """Append standard basis vectors, in index order, that leave the span."""
    n = B.rows
    if B.cols > n or not independent(B):
        raise NotIndependent("columns are linearly dependent")
    cur = B
    for j in range(1, n + 1):
        if cur.cols == n:
            break
        cand = hstack(cur, unit_vector(B.field, n, j))
        if independent(cand):
            cur = cand
    return cur


def invariant_block_form(A: Matrix, i: int) -> BlockForm:
    n = _square(A)
    kr = krylov_local_poly(A, i)
    k = kr.k
    Q = extend_to_basis(kr.basis)
    P = transpose(Q)
    block = mul(mul(P, transpose(A)), inverse(P))
    W = submatrix(block, 0, k, 0, k)
    E = submatrix(block, k, n, k, n)
    return BlockForm(P, W, E, k, kr.g, Q, block)


def annihilating_poly(A: Matrix) -> Poly:
    """Monic p of least degree with p(A) = 0.

    Scans d = 1, 2, ... for the first dependence among vec(I), ..., vec(A^d).
    """
    n = _square(A)
    F = A.field
    powers = [identity(F, n)]
    for _ in range(n):
        powers.append(mul(powers[-1], A))
        stack = from_columns(F, [vec(P) for P in powers])
        x = null_vector(stack)
        if x is not None:
            lead = F.inv(x[-1])
            return Poly(F, [c * lead for c in x])
    raise AssertionError("no annihilating polynomial of degree <= n")


def inverse_or_zero_divisor(A: Matrix) -> Witness:
    """Split the annihilator as q(x) x^s with q(0) != 0 and read off B."""
    n = _square(A)
    F = A.field
    p = annihilating_poly(A)
    s = next(j for j, c in enumerate(p.coeffs) if c)
    q = Poly(F, p.coeffs[s:])
    qA = eval_matrix(q, A)
    if qA.is_zero():
        # q(A) = q0 I + A r(A) = 0
        r = Poly(F, q.coeffs[1:])
        B = scale(-F.inv(q.coeffs[0]), eval_matrix(r, A))
        return Witness(INVERSE, B)
    Ak = [identity(F, n)]
    for _ in range(s - 1):
        Ak.append(mul(Ak[-1], A))
    for k in range(s - 1, -1, -1):
        B = mul(qA, Ak[k])
        if not B.is_zero():
            return Witness(ZERO_DIVISOR, B)
    raise AssertionError("q(A) != 0 but every q(A) A^k vanished")


def dependence_to_inverse_or_zero(A: Matrix) -> Witness:
    """Build B from kernel vectors of [A | e_i], one column per i."""
    n = _square(A)
    F = A.field
    inv_cols, zd_cols = [], []
    for i in range(1, n + 1):
        b = null_vector(hstack(A, unit_vector(F, n, i)))
        last = b[-1]
        if last:
            f = -F.inv(last)
            inv_cols.append([c * f for c in b[:-1]])
            zd_cols.append([F.zero] * n)
        else:
            inv_cols.append(None)
            zd_cols.append(list(b[:-1]))
    if all(c is not None for c in inv_cols):
        return Witness(INVERSE, from_columns(F, inv_cols))
    return Witness(ZERO_DIVISOR, from_columns(F, zd_cols))


def steinitz_exchange(T: Matrix, E: Matrix) -> tuple[tuple[int, ...], Matrix]:
    """Swap the columns of E into the spanning family T.

    Returns the 1-based indices F of the evicted T columns and T' =
    (T columns not in F, in order) followed by the columns of E.
    """
    n = T.rows
    if E.rows != n:
        raise NotIndependent("E and T live in different spaces")
    if rank(T) != n:
        raise NotTotal("T does not span the whole space")
    if E.cols > n or not independent(E):
        raise NotIndependent("E is linearly dependent")
    F = T.field
    labels: list[tuple[str, int]] = [("T", j) for j in range(T.cols)]
    current = list(T.columns())
    evicted = []
    for j, e in enumerate(E.columns()):
        coeffs = solve(from_columns(F, current), e)
        pos = next(p for p, (tag, _) in enumerate(labels) if tag == "T" and coeffs[p])
        evicted.append(labels[pos][1] + 1)
        labels[pos] = ("E", j)
        current[pos] = e
    kept = [c for idx, c in enumerate(T.columns()) if idx + 1 not in evicted]
    T2 = from_columns(F, kept + E.columns())
    if rank(T2) != n:
        raise AssertionError("exchange lost totality")
    return tuple(sorted(evicted)), T2


def power_reduction_matrix(A: Matrix, m: int) -> Matrix:
    """N: m x m blocks of size n, A on the block superdiagonal."""
    n = _square(A)
    F = A.field
    N = [[F.zero] * (n * m) for _ in range(n * m)]
    for b in range(m - 1):
        for r in range(n):
            for c in range(n):
                N[b * n + r][(b + 1) * n + c] = A.data[r][c]
    return Matrix(F, n * m, n * m, N)


def pow_via_inverse(A: Matrix, m: int, method: str = "charpoly") -> Witness:
    """[I, A, ..., A^(m-1)] read from the top block row of (I - N)^-1.

    ``charpoly`` inverts with the Berkowitz adjugate (det(I - N) = 1, so no
    division happens); ``triangular`` uses the block-recursive lower
    triangular inverse on the transpose.
    """
    n = _square(A)
    if m < 1:
        raise ValueError("m must be >= 1")
    F = A.field
    C = identity(F, n * m) - power_reduction_matrix(A, m)
    if method == "charpoly":
        if determinant(C) != F.one:
            raise AssertionError("I - N is not unipotent")
        Cinv = adjoint(C)
    elif method == "triangular":
        Cinv = transpose(triangular_inverse(transpose(C)))
    else:
        raise ValueError(f"unknown method {method!r}")
    return Witness(POWER_LIST, [submatrix(Cinv, 0, n, j * n, (j + 1) * n) for j in range(m)])


__all__ = [
    "ANNIHILATING_POLY", "BlockForm", "EXCHANGE_SET", "INVERSE", "Independent", "KERNEL_VECTOR",
    "KrylovResult", "POWER_LIST", "Witness", "ZERO_DIVISOR", "annihilating_poly",
    "dependence_to_inverse_or_zero", "extend_to_basis", "invariant_block_form",
    "inverse_or_zero_divisor", "kernel_vector", "krylov_local_poly", "pow_via_inverse",
    "power_reduction_matrix", "steinitz_exchange",
]
