from fractions import Fraction

import pytest
from tests.conftest import random_invertible, random_skew

from skewrank import catalog, linalg
from skewrank.forms import Form
from skewrank.pencil import minimal_indices
from skewrank.skew import SkewPolyMatrix, pfaffian

Q = Fraction
AB = ("a", "b")
ABC = ("a", "b", "c")


def test_constructor_validation():
    with pytest.raises(ValueError):
        SkewPolyMatrix(3, AB, {(0, 0): "a"})
    with pytest.raises(ValueError):
        SkewPolyMatrix(3, AB, {(2, 1): "a"})
    with pytest.raises(ValueError):
        SkewPolyMatrix(3, AB, {(0, 1): "a^2"})
    A = SkewPolyMatrix(3, AB, {(0, 1): "a"})
    assert A.entry(1, 0) == -Form.variable(AB, "a")
    assert A.entry(2, 2).is_zero()


def test_pfaffian_base_case_and_sign():
    assert pfaffian([[0, 5], [-5, 0]]) == 5
    A = SkewPolyMatrix(2, AB, {(0, 1): "a"})
    assert str(A.pfaffian_symbolic()) == "a"
    # swapping the two rows and columns flips the sign (det P = -1)
    P = [[0, 1], [1, 0]]
    assert A.congruence_transform(P).pfaffian_symbolic() \
        == -Form.variable(AB, "a")


def test_pfaffian_of_constant_rank4_6x6_is_zero():
    tri = catalog.get("triangle3").matrix
    six = tri.direct_sum(tri)
    assert six.pfaffian_symbolic().is_zero()


def test_pfaffian_block_diagonal_vs_det():
    vars = ABC
    A = SkewPolyMatrix(6, vars, {(0, 1): "a", (2, 3): "b", (4, 5): "c"})
    pf = A.pfaffian_symbolic()
    assert pf in (Form(vars, {(1, 1, 1): 1}), Form(vars, {(1, 1, 1): -1}))
    for p in [(1, 2, 3), (2, -1, 5), (1, 1, 1)]:
        M = A.evaluate_at(p)
        assert pf.evaluate(p) ** 2 == linalg.det(M)


def test_pf_squared_is_det(rng):
    for n in (2, 4, 6, 8, 10):
        for _ in range(4):
            M = random_skew(rng, n)
            assert pfaffian(M) ** 2 == linalg.det(M)


def test_pf_congruence_scaling(rng):
    for n in (2, 4, 6):
        for _ in range(4):
            M = random_skew(rng, n)
            P = random_invertible(rng, n)
            Pt = linalg.transpose(P)
            assert pfaffian(linalg.mat_mul(linalg.mat_mul(Pt, M), P)) \
                == linalg.det(P) * pfaffian(M)


def test_sub_pfaffians():
    M8 = catalog.get("M8").matrix
    full = SkewPolyMatrix(4, AB, {(0, 1): "a", (2, 3): "b"})
    assert full.sub_pfaffians(4) == [full.pfaffian_symbolic()]
    size2 = full.sub_pfaffians(2)
    nonzero = [str(f) for f in size2 if not f.is_zero()]
    assert sorted(nonzero) == ["a", "b"]
    with pytest.raises(ValueError):
        M8.sub_pfaffians(3)
    M7 = catalog.get("M7").matrix
    with pytest.raises(ValueError):
        M7.sub_pfaffians(8)


def test_rank_at_examples():
    assert catalog.get("M7").matrix.rank_at((1, 1)) == 6
    assert catalog.get("pi2").matrix.rank_at((1, 0, 0)) == 6
    assert catalog.get("westwick").matrix.rank_at((1, 1, 1, 1)) == 8
    with pytest.raises(ValueError):
        catalog.get("M7").matrix.rank_at((0, 0))


def test_rank_at_always_even(rng):
    for name in ("M8", "pi3", "westwick"):
        A = catalog.get(name).matrix
        for _ in range(12):
            p = tuple(Q(rng.randint(-5, 5)) for _ in range(A.nvars))
            if not any(p):
                continue
            assert A.rank_at(p) % 2 == 0


def test_sub_pfaffians_cut_rank_strata(rng):
    for name in ("rank4_6x6", "conic5", "pi1"):
        A = catalog.get(name).matrix
        for _ in range(8):
            p = tuple(Q(rng.randint(-4, 4)) for _ in range(A.nvars))
            if not any(p):
                continue
            r = A.rank_at(p)
            for size in range(2, A.order + 1, 2):
                vanish = all(f.evaluate(p) == 0 for f in A.sub_pfaffians(size))
                assert vanish == (r < size)


def test_sub_pfaffians_cut_rank_strata_random_matrices(rng):
    # same cross-check on random matrices of linear forms, orders up to 8
    for order in (4, 6, 8):
        entries = {}
        for i in range(order):
            for j in range(i + 1, order):
                f = Form(ABC, {(1, 0, 0): rng.randint(-2, 2),
                               (0, 1, 0): rng.randint(-2, 2),
                               (0, 0, 1): rng.randint(-2, 2)})
                if not f.is_zero() and rng.random() < 0.7:
                    entries[(i, j)] = f
        if not entries:
            continue
        A = SkewPolyMatrix(order, ABC, entries)
        for _ in range(5):
            p = tuple(Q(rng.randint(-3, 3)) for _ in range(3))
            if not any(p):
                continue
            r = A.rank_at(p)
            for size in range(2, order + 1, 2):
                vanish = all(f.evaluate(p) == 0 for f in A.sub_pfaffians(size))
                assert vanish == (r < size)


def test_congruence_preserves_invariants(rng):
    M8 = catalog.get("M8").matrix
    for _ in range(3):
        P = random_invertible(rng, 8)
        assert minimal_indices(M8.congruence_transform(P)).partition == (2, 1)
    with pytest.raises(ValueError):
        M8.congruence_transform([[0] * 8] * 8)


def test_parameter_change():
    M7 = catalog.get("M7").matrix
    assert M7.parameter_change([[1, 0], [0, 1]]) == M7
    swapped = M7.parameter_change([[0, 1], [1, 0]])
    assert minimal_indices(swapped).partition == (3,)
    scaled = M7.parameter_change([[2, 0], [0, 1]])
    assert minimal_indices(scaled).partition == (3,)
    with pytest.raises(ValueError):
        M7.parameter_change([[1, 1], [1, 1]])


def test_direct_sum(rng):
    tri = catalog.get("triangle3").matrix
    nine = tri.direct_sum(tri).direct_sum(tri)
    assert nine.order == 9
    for _ in range(6):
        p = tuple(Q(rng.randint(-4, 4)) for _ in range(3))
        if not any(p):
            continue
        assert nine.rank_at(p) == 3 * tri.rank_at(p)
    M7 = catalog.get("M7").matrix
    assert minimal_indices(M7.direct_sum(M7)).partition == (3, 3)
    padded = M7.direct_sum(SkewPolyMatrix.zero(1, AB))
    assert padded == M7.pad_zero(1)
    with pytest.raises(ValueError):
        tri.direct_sum(M7)


def test_is_nondegenerate():
    assert catalog.get("M7").matrix.is_nondegenerate() == (True, None)
    flag, witness = catalog.get("pi1").matrix.is_nondegenerate()
    assert flag is False
    assert list(witness) == [0, 0, 0, 0, 0, 0, 0, 1]
    flag, witness = catalog.get("M7").matrix.pad_zero(2).is_nondegenerate()
    assert flag is False
    assert any(witness)


def test_json_round_trip():
    for name in ("M8", "pi5", "westwick"):
        A = catalog.get(name).matrix
        assert SkewPolyMatrix.loads(A.dumps()) == A


def test_coefficient_basis_round_trip():
    for name in ("M9", "pi4", "westwick"):
        A = catalog.get(name).matrix
        B = SkewPolyMatrix.from_coefficient_basis(A.vars, A.coefficient_basis())
        assert B == A
