import random

from exactla.field import GF, Q
from exactla.identities import corner_value, leading_scalar, power_blocks, weighted_rank_one_sum
from exactla.matrix import companion, power


def _cases(F, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.randint(2, 6)
        c = [F.random_element(rng) for _ in range(k)]
        yield c, companion(F, c)


def test_power_blocks_below_top_degree():
    for c, A in _cases(Q, 50, 1):
        k = len(c)
        for i in range(1, k - 1):
            actual, predicted = power_blocks(A, i)
            assert actual == predicted


def test_non_corner_blocks_at_every_degree():
    for c, A in _cases(Q, 50, 2):
        for i in range(1, len(c)):
            actual, predicted = power_blocks(A, i)
            assert actual[1:] == predicted[1:]


def test_top_corner_is_minus_last_coefficient():
    for F in (Q, GF(5)):
        for c, A in _cases(F, 50, 3):
            k = len(c)
            w = leading_scalar(A, k - 1)
            assert w == corner_value(A, k - 1) == -F.coerce(c[-1])
            assert power(A, k)[0, 0] == w


def test_top_corner_two_by_two_by_hand():
    # A = [[0, -c2], [1, -c1]]; (A^2)[0][0] = 0*0 + (-c2)*1 = -c2
    A = companion(Q, [3, 7])
    assert power(A, 2)[0, 0] == -7


def test_weighted_sum_equals_minus_ck_identity():
    for F in (Q, GF(2), GF(5)):
        for c, A in _cases(F, 50, 4):
            total, expected = weighted_rank_one_sum(A, c)
            assert total == expected
