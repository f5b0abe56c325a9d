import random

import pytest

from exactla.errors import BadCut, DimensionMismatch, NotSquare, ZeroDimension
from exactla.field import GF, Q
from exactla.matrix import (Matrix, add, block2x2, build, chain_product, companion, diag,
                            entry, identity, matrix_powers, mul, pad, power, scale, split2x2,
                            sub, trace, transpose, zeros)
from exactla.sampling import random_matrix

from conftest import FIELDS, M


def test_build():
    assert build(Q, 2, 2, lambda i, j: 1 if i == j else 0) == identity(Q, 2)
    assert build(Q, 1, 3, lambda i, j: j) == M([[1, 2, 3]])
    with pytest.raises(ZeroDimension):
        build(Q, 0, 2, lambda i, j: 0)


def test_entry_padding():
    I2 = identity(Q, 2)
    assert entry(I2, 1, 1) == 1
    assert entry(I2, 3, 3) == 0
    assert entry(I2, 0, 1) == 0
    assert pad(I2, 3, 3) == diag(Q, [1, 1, 0])


def test_ring_ops():
    I2 = identity(Q, 2)
    assert add(I2, I2) == diag(Q, [2, 2])
    A = M([[1, 2], [3, 4]])
    assert sub(A, A) == zeros(Q, 2, 2)
    assert scale(3, A) == M([[3, 6], [9, 12]])
    with pytest.raises(DimensionMismatch):
        add(I2, identity(Q, 3))
    with pytest.raises(DimensionMismatch):
        mul(M([[1, 2]]), M([[1, 2]]))


def test_mul_examples(rng):
    A = random_matrix(Q, 2, 2, rng)
    assert mul(identity(Q, 2), A) == A
    swap = M([[0, 1], [1, 0]])
    assert mul(swap, swap) == identity(Q, 2)
    B = M([[2, 1], [0, 3]])
    expected = [[sum(B[i, k] * B[k, j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert expected == [[4, 5], [0, 9]]
    assert mul(B, B) == M(expected)


def test_transpose_and_trace(rng):
    assert transpose(identity(Q, 2)) == identity(Q, 2)
    assert transpose(M([[1, 2, 3]])) == M([[1], [2], [3]])
    A = random_matrix(Q, 3, 4, rng)
    assert transpose(transpose(A)) == A
    assert trace(identity(Q, 3)) == 3
    assert trace(M([[0, 1], [1, 0]])) == 0
    assert trace(M([[2, 1], [0, 3]])) == 5
    with pytest.raises(NotSquare):
        trace(A)


def test_power_examples(rng):
    A = random_matrix(Q, 3, 3, rng)
    assert power(A, 0) == identity(Q, 3)
    assert power(M([[0, 1], [0, 0]]), 2) == zeros(Q, 2, 2)
    assert power(diag(Q, [2, 3]), 3) == diag(Q, [8, 27])


def test_block_round_trip(rng):
    assert block2x2(M([[2]]), M([[0]]), M([[0]]), M([[3]])) == diag(Q, [2, 3])
    A = M([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    a11, R, S, Mm = split2x2(A, 1)
    assert a11 == M([[1]]) and R == M([[2, 3]]) and S == M([[4], [7]])
    assert Mm == M([[5, 6], [8, 9]])
    for _ in range(50):
        j, k = rng.randint(1, 4), rng.randint(1, 4)
        blocks = (random_matrix(Q, j, j, rng), random_matrix(Q, j, k, rng),
                  random_matrix(Q, k, j, rng), random_matrix(Q, k, k, rng))
        assert split2x2(block2x2(*blocks), j) == blocks
    with pytest.raises(BadCut):
        split2x2(A, 3)


def test_companion_examples():
    assert companion(Q, [-5, 6]) == M([[0, -6], [1, 5]])
    assert companion(Q, [7]) == M([[-7]])
    assert companion(Q, [0, 0]) == M([[0, 0], [1, 0]])
    assert companion(Q, [1, 2, 3]) == M([[0, 0, -3], [1, 0, -2], [0, 1, -1]])


@pytest.mark.parametrize("F", FIELDS)
def test_ring_laws(F):
    rng = random.Random(11)
    for _ in range(500):
        m, n, p, q = (rng.randint(1, 6) for _ in range(4))
        A, B, C = random_matrix(F, m, n, rng), random_matrix(F, n, p, rng), random_matrix(F, p, q, rng)
        assert mul(mul(A, B), C) == mul(A, mul(B, C))
        B2 = random_matrix(F, n, p, rng)
        assert mul(A, add(B, B2)) == add(mul(A, B), mul(A, B2))
        assert mul(identity(F, m), A) == A == mul(A, identity(F, n))


def test_trace_commutes(rng):
    for _ in range(200):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        A, B = random_matrix(Q, m, n, rng), random_matrix(Q, n, m, rng)
        assert trace(mul(A, B)) == trace(mul(B, A))


def test_power_additive(rng):
    for _ in range(50):
        A = random_matrix(GF(7), 3, 3, rng)
        j, k = rng.randint(0, 5), rng.randint(0, 5)
        assert power(A, j + k) == mul(power(A, j), power(A, k))


@pytest.mark.parametrize("parallel", [False, True])
def test_product_modes_agree(rng, parallel):
    for _ in range(20):
        A = random_matrix(Q, 4, 4, rng)
        k = rng.randint(1, 9)
        assert matrix_powers(A, k, "tree", parallel) == matrix_powers(A, k) == \
            [power(A, i) for i in range(1, k + 1)]
        dims = [rng.randint(1, 4) for _ in range(rng.randint(2, 7))]
        mats = [random_matrix(Q, a, b, rng) for a, b in zip(dims, dims[1:])]
        seq = chain_product(mats)
        assert chain_product(mats, "tree", parallel) == seq
        left = mats[0]
        for X in mats[1:]:
            left = mul(left, X)
        assert left == seq
