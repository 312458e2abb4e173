import random
from fractions import Fraction

import pytest

from skewrank import linalg

Q = Fraction


@pytest.fixture
def rng():
    return random.Random(12345)


def random_invertible(rng, n, lo=-3, hi=3):
    """Seeded invertible rational matrix."""
    while True:
        M = [[Q(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        if linalg.det(M) != 0:
            return M


def random_skew(rng, n, lo=-5, hi=5):
    M = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Q(rng.randint(lo, hi))
            M[i][j] = v
            M[j][i] = -v
    return M
