import random

import pytest

from exactla.field import GF, Q
from exactla.sampling import random_matrix

FIELDS = [Q, GF(2), GF(5), GF(7)]


@pytest.fixture
def rng():
    return random.Random(20240601)


def rand_square(F, rng, lo=1, hi=5):
    n = rng.randint(lo, hi)
    return random_matrix(F, n, n, rng)


def M(rows, F=Q):
    from exactla.matrix import Matrix

    return Matrix.from_rows(F, rows)
