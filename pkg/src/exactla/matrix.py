"""Dense immutable matrices over a :class:`~exactla.field.Field`.

The public accessor :func:`entry` is 1-based and total: out-of-range
positions read as zero.  Algebraic operations are strict about shapes and
raise :class:`DimensionMismatch` instead of padding.
"""
from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Callable, Iterable, Iterator, Sequence

from .errors import BadCut, DimensionMismatch, FieldMismatch, NotSquare, ZeroDimension
from .field import Element, Field


class Matrix:
    """Row-major dense matrix; ``data`` is a tuple of row tuples (0-based)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: Sequence[Sequence[Element]]):
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatch(f"entries do not form a {rows}x{cols} array")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        """Build from nested lists, coercing ints and Fractions into ``field``."""
        rows = [[field.coerce(a) for a in r] for r in rows]
        if not rows or not rows[0]:
            raise ZeroDimension("from_rows needs at least one row and column")
        return cls(field, len(rows), len(rows[0]), rows)

    @classmethod
    def empty(cls, field: Field) -> "Matrix":
        """The 0x0 matrix, used only as a degenerate block."""
        return cls(field, 0, 0, ())

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def entry(self, i: int, j: int) -> Element:
        return entry(self, i, j)

    def is_zero(self) -> bool:
        return not any(a for r in self.data for a in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return scale(self.field.from_integer(-1), self)

    def __matmul__(self, other):
        return mul(self, other)

    def __mul__(self, a):
        return scale(a, self)

    __rmul__ = __mul__

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.data)
        return f"Matrix<{self.field} {self.rows}x{self.cols}>[{body}]"


# -- scalar operation accounting (benchmark support) -------------------------

class _OpCounter:
    def __init__(self):
        self.mults = 0
        self._lock = threading.Lock()

    def add(self, k: int) -> None:
        with self._lock:
            self.mults += k


_counter: _OpCounter | None = None


@contextmanager
def count_scalar_ops() -> Iterator[_OpCounter]:
    """Count scalar multiplications performed by :func:`mul` inside the block."""
    global _counter
    prev, _counter = _counter, _OpCounter()
    try:
        yield _counter
    finally:
        _counter = prev


# -- constructors ------------------------------------------------------------

def build(F: Field, m: int, n: int, gen: Callable[[int, int], object]) -> Matrix:
    """Entry (i, j) is ``gen(i, j)`` for 1-based i, j."""
    if m < 1 or n < 1:
        raise ZeroDimension(f"cannot build a {m}x{n} matrix")
    return Matrix(F, m, n, [[F.coerce(gen(i, j)) for j in range(1, n + 1)] for i in range(1, m + 1)])


def identity(F: Field, n: int) -> Matrix:
    one, zero = F.one, F.zero
    return Matrix(F, n, n, [[one if i == j else zero for j in range(n)] for i in range(n)])


def zeros(F: Field, m: int, n: int) -> Matrix:
    zero = F.zero
    return Matrix(F, m, n, [[zero] * n for _ in range(m)])


def diag(F: Field, values: Iterable) -> Matrix:
    values = [F.coerce(v) for v in values]
    n = len(values)
    zero = F.zero
    return Matrix(F, n, n, [[values[i] if i == j else zero for j in range(n)] for i in range(n)])


def column_vector(F: Field, values: Iterable) -> Matrix:
    values = [F.coerce(v) for v in values]
    return Matrix(F, len(values), 1, [[v] for v in values])


def unit_vector(F: Field, n: int, i: int) -> Matrix:
    """The standard basis column e_i of F^n (1-based i)."""
    return column_vector(F, [1 if k == i else 0 for k in range(1, n + 1)])


def from_columns(F: Field, cols: Sequence[Sequence[Element]]) -> Matrix:
    if not cols:
        raise ZeroDimension("no columns")
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise DimensionMismatch("columns of unequal length")
    return Matrix(F, n, len(cols), [[c[i] for c in cols] for i in range(n)])


def hstack(*blocks: Matrix) -> Matrix:
    F = _same_field(*blocks)
    if len({b.rows for b in blocks}) != 1:
        raise DimensionMismatch("hstack needs equal row counts")
    rows = blocks[0].rows
    return Matrix(F, rows, sum(b.cols for b in blocks),
                  [sum((b.data[i] for b in blocks), ()) for i in range(rows)])


def vec(A: Matrix) -> tuple:
    """Column-stacking vectorization of A."""
    return tuple(A.data[i][j] for j in range(A.cols) for i in range(A.rows))


# -- access ------------------------------------------------------------------

def entry(A: Matrix, i: int, j: int) -> Element:
    if 1 <= i <= A.rows and 1 <= j <= A.cols:
        return A.data[i - 1][j - 1]
    return A.field.zero


def pad(A: Matrix, m: int, n: int) -> Matrix:
    """Resize to m x n, reading missing entries as zero."""
    return Matrix(A.field, m, n, [[entry(A, i, j) for j in range(1, n + 1)] for i in range(1, m + 1)])


def submatrix(A: Matrix, r0: int, r1: int, c0: int, c1: int) -> Matrix:
    """Rows r0:r1 and columns c0:c1, 0-based half-open."""
    return Matrix(A.field, r1 - r0, c1 - c0, [r[c0:c1] for r in A.data[r0:r1]])


# -- ring operations ---------------------------------------------------------

def _same_field(*ms: Matrix) -> Field:
    F = ms[0].field
    for M in ms[1:]:
        if M.field != F:
            raise FieldMismatch(f"{F} vs {M.field}")
    return F


def _same_shape(A: Matrix, B: Matrix) -> None:
    _same_field(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"{A.rows}x{A.cols} vs {B.rows}x{B.cols}")


def add(A: Matrix, B: Matrix) -> Matrix:
    _same_shape(A, B)
    return Matrix(A.field, A.rows, A.cols,
                  [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A.data, B.data)])


def sub(A: Matrix, B: Matrix) -> Matrix:
    _same_shape(A, B)
    return Matrix(A.field, A.rows, A.cols,
                  [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A.data, B.data)])


def scale(a, A: Matrix) -> Matrix:
    a = A.field.coerce(a)
    return Matrix(A.field, A.rows, A.cols, [[a * x for x in r] for r in A.data])


def mul(A: Matrix, B: Matrix) -> Matrix:
    F = _same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    if _counter is not None:
        _counter.add(A.rows * A.cols * B.cols)
    zero = F.zero
    bcols = list(zip(*B.data)) if B.rows else [()] * B.cols
    out = []
    for ra in A.data:
        row = []
        for cb in bcols:
            acc = zero
            for a, b in zip(ra, cb):
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return Matrix(F, A.rows, B.cols, out)


def transpose(A: Matrix) -> Matrix:
    return Matrix(A.field, A.cols, A.rows, list(zip(*A.data)) if A.rows else [()] * A.cols)


def trace(A: Matrix) -> Element:
    if not A.is_square:
        raise NotSquare(f"trace of a {A.rows}x{A.cols} matrix")
    acc = A.field.zero
    for i in range(A.rows):
        acc = acc + A.data[i][i]
    return acc


def power(A: Matrix, k: int) -> Matrix:
    """A^k by repeated right multiplication, A^0 = I."""
    if not A.is_square:
        raise NotSquare(f"power of a {A.rows}x{A.cols} matrix")
    if k < 0:
        raise ValueError("negative exponent")
    P = identity(A.field, A.rows)
    for _ in range(k):
        P = mul(P, A)
    return P


def matrix_powers(A: Matrix, k: int, mode: str = "sequential", parallel: bool = False) -> list[Matrix]:
    """Return [A^1, ..., A^k].

    ``sequential`` multiplies by A one step at a time.  ``tree`` doubles:
    once A^1..A^h are known, A^(h+j) = A^h A^j for j = 1..h are independent
    products, so the whole list takes about log2(k) rounds.
    """
    if not A.is_square:
        raise NotSquare(f"powers of a {A.rows}x{A.cols} matrix")
    if k <= 0:
        return []
    if mode == "sequential":
        out = [A]
        for _ in range(k - 1):
            out.append(mul(out[-1], A))
        return out
    if mode != "tree":
        raise ValueError(f"unknown product mode {mode!r}")
    out = [A]
    while len(out) < k:
        h = len(out)
        top = out[-1]
        need = min(h, k - h)
        out.extend(_map(lambda j: mul(top, out[j]), range(need), parallel))
    return out


def _map(fn, items, parallel: bool) -> list:
    items = list(items)
    if parallel and len(items) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(items))) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def chain_product(mats: Sequence[Matrix], mode: str = "sequential", parallel: bool = False) -> Matrix:
    """Product M1 M2 ... Mk.

    ``sequential`` folds from the right (so a trailing column vector keeps
    every step a matrix-vector product).  ``tree`` multiplies adjacent pairs
    level by level; with ``parallel`` each level runs on a thread pool.
    Exact arithmetic makes every mode return identical entries.
    """
    if not mats:
        raise ValueError("empty product")
    mats = list(mats)
    if mode == "sequential":
        acc = mats[-1]
        for M in reversed(mats[:-1]):
            acc = mul(M, acc)
        return acc
    if mode != "tree":
        raise ValueError(f"unknown product mode {mode!r}")
    while len(mats) > 1:
        pairs = [(mats[i], mats[i + 1]) for i in range(0, len(mats) - 1, 2)]
        level = _map(lambda ab: mul(*ab), pairs, parallel)
        if len(mats) % 2:
            level.append(mats[-1])
        mats = level
    return mats[0]


# -- block structure ---------------------------------------------------------

def block2x2(W: Matrix, X: Matrix, Y: Matrix, Z: Matrix) -> Matrix:
    """Assemble [[W, X], [Y, Z]]."""
    F = _same_field(W, X, Y, Z)
    if W.rows != X.rows or Y.rows != Z.rows or W.cols != Y.cols or X.cols != Z.cols:
        raise DimensionMismatch("blocks do not conform")
    top = [rw + rx for rw, rx in zip(W.data, X.data)]
    bottom = [ry + rz for ry, rz in zip(Y.data, Z.data)]
    return Matrix(F, W.rows + Y.rows, W.cols + X.cols, top + bottom)


def split2x2(A: Matrix, k: int) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Inverse of :func:`block2x2` for a square A cut after row/column k."""
    if not A.is_square:
        raise NotSquare(f"split of a {A.rows}x{A.cols} matrix")
    if not 1 <= k < A.rows:
        raise BadCut(f"cut {k} outside 1..{A.rows - 1}")
    n = A.rows
    return (submatrix(A, 0, k, 0, k), submatrix(A, 0, k, k, n),
            submatrix(A, k, n, 0, k), submatrix(A, k, n, k, n))


def companion(F: Field, coeffs: Sequence) -> Matrix:
    """Companion matrix of x^k + c1 x^(k-1) + ... + ck.

    ``coeffs`` is (c1, ..., ck).  Ones sit on the first subdiagonal and the
    last column is (-ck, ..., -c1) read top to bottom.
    """
    cs = [F.coerce(c) for c in coeffs]
    k = len(cs)
    if k < 1:
        raise ZeroDimension("companion matrix needs degree >= 1")
    zero, one = F.zero, F.one
    rows = [[zero] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = one
    for i in range(k):
        rows[i][k - 1] = rows[i][k - 1] - cs[k - 1 - i]
    return Matrix(F, k, k, rows)


def is_lower_triangular(A: Matrix) -> bool:
    return A.is_square and all(not A.data[i][j] for i in range(A.rows) for j in range(i + 1, A.cols))


def is_upper_triangular(A: Matrix) -> bool:
    return A.is_square and all(not A.data[i][j] for i in range(A.rows) for j in range(i))
