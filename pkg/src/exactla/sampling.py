"""Seeded random inputs for property checks and benchmarks."""
from __future__ import annotations

import random

from .field import Field
from .matrix import Matrix, identity, mul


def random_matrix(F: Field, m: int, n: int, rng: random.Random, bound: int = 5) -> Matrix:
    """Integers in [-bound, bound] over Q, uniform residues over GF(p)."""
    return Matrix(F, m, n, [[F.random_element(rng, bound) for _ in range(n)] for _ in range(m)])


def random_nonzero(F: Field, rng: random.Random, bound: int = 5):
    while True:
        a = F.random_element(rng, bound)
        if a:
            return a


def elementary(F: Field, n: int, rng: random.Random) -> Matrix:
    """A random row swap, nonzero row scaling, or row addition."""
    rows = [list(r) for r in identity(F, n).data]
    kind = rng.randrange(3) if n > 1 else 1
    if kind == 0:
        i, j = rng.sample(range(n), 2)
        rows[i], rows[j] = rows[j], rows[i]
    elif kind == 1:
        i = rng.randrange(n)
        rows[i][i] = random_nonzero(F, rng, 3)
    else:
        i, j = rng.sample(range(n), 2)
        rows[i][j] = random_nonzero(F, rng, 3)
    return Matrix(F, n, n, rows)


def random_invertible(F: Field, n: int, rng: random.Random, steps: int | None = None) -> Matrix:
    """Product of random elementary matrices, hence invertible by construction."""
    P = identity(F, n)
    for _ in range(steps if steps is not None else 2 * n + 1):
        P = mul(elementary(F, n, rng), P)
    return P


def random_unit_lower(F: Field, n: int, rng: random.Random, bound: int = 5) -> Matrix:
    zero, one = F.zero, F.one
    return Matrix(F, n, n, [[F.random_element(rng, bound) if j < i else (one if i == j else zero)
                             for j in range(n)] for i in range(n)])


def random_monic_coeffs(F: Field, k: int, rng: random.Random, bound: int = 5) -> list:
    """c_1..c_k of a random monic x^k + c_1 x^(k-1) + ... + c_k."""
    return [F.random_element(rng, bound) for _ in range(k)]
