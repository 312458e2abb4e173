from fractions import Fraction

from tests.conftest import random_invertible, random_skew

from skewrank import linalg

Q = Fraction


def test_rank_and_det_basics():
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.det([[Q(1, 2), 0], [0, 4]]) == 2
    assert linalg.det([[0, 1], [1, 0]]) == -1


def test_nullspace_solves(rng):
    for _ in range(30):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        rows = [[Q(rng.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
        basis = linalg.nullspace(rows, ncols=n)
        assert len(basis) == n - linalg.rank(rows)
        for v in basis:
            assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in rows)


def test_invert_round_trip(rng):
    for _ in range(10):
        n = rng.randint(1, 5)
        M = random_invertible(rng, n)
        I = linalg.mat_mul(M, linalg.invert(M))
        assert I == [[Q(1) if i == j else Q(0) for j in range(n)]
                     for i in range(n)]


def test_span_rref_is_canonical(rng):
    for _ in range(20):
        vs = [[Q(rng.randint(-3, 3)) for _ in range(5)] for _ in range(3)]
        scaled = [[2 * x for x in v] for v in reversed(vs)]
        assert linalg.span_rref(vs) == linalg.span_rref(vs + scaled)


def test_bareiss_rank_matches_rref(rng):
    for _ in range(40):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        rows = [[Q(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(m)]
        _, pivots = linalg.rref(rows)
        assert linalg.bareiss_rank(rows) == len(pivots)


def test_det_of_skew_is_square(rng):
    for n in (2, 4, 6):
        M = random_skew(rng, n)
        d = linalg.det(M)
        assert d >= 0
