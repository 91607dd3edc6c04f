import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gpencil.errors import DimensionMismatch, InvalidParameter, InvalidSet
from gpencil.exactdet import bareiss_determinant
from gpencil.setmatrix import (
    BigIntMatrix,
    Permutation,
    SetKind,
    SetSpec,
    build_gcd_matrix,
    build_lcm_matrix,
    build_max_matrix,
    build_min_matrix,
    permute_conjugate,
)

from conftest import leibniz_det, totient

int_sets = st.lists(st.integers(1, 200), min_size=1, max_size=7, unique=True).map(SetSpec.integers)


def test_max_min_small():
    S = SetSpec.integers([1, 2])
    assert build_max_matrix(S).tolist() == [[1, 2], [2, 2]]
    assert build_min_matrix(S).tolist() == [[1, 1], [1, 2]]
    assert build_max_matrix(SetSpec.integers([5])).tolist() == [[5]]
    assert build_min_matrix(SetSpec.integers([5])).tolist() == [[5]]


def test_max_min_four_elements():
    a, b, c, d = 1, 2, 3, 4
    S = SetSpec.integers([a, b, c, d])
    assert build_max_matrix(S).tolist() == [[a, b, c, d], [b, b, c, d], [c, c, c, d], [d, d, d, d]]
    assert build_min_matrix(S).tolist() == [[a, a, a, a], [a, b, b, b], [a, b, c, c], [a, b, c, d]]


def test_gcd_lcm_examples():
    assert build_gcd_matrix(SetSpec.range(1, 3)).tolist() == [[1, 1, 1], [1, 2, 1], [1, 1, 3]]
    assert build_gcd_matrix(SetSpec.integers([2, 3, 5])).tolist() == [[2, 1, 1], [1, 3, 1], [1, 1, 5]]
    assert build_gcd_matrix(SetSpec.range(1, 4)).tolist() == [
        [1, 1, 1, 1], [1, 2, 1, 2], [1, 1, 3, 1], [1, 2, 1, 4]]
    assert build_lcm_matrix(SetSpec.range(1, 3)).tolist() == [[1, 2, 3], [2, 2, 6], [3, 6, 3]]
    assert build_lcm_matrix(SetSpec.integers([2, 3, 5])).tolist() == [[2, 6, 10], [6, 3, 15], [10, 15, 5]]


def test_prime_power_set_gives_max_min():
    T = SetSpec.integers([1, 2, 4])
    assert build_lcm_matrix(T).tolist() == [[1, 2, 4], [2, 2, 4], [4, 4, 4]]
    for p in (2, 3, 5):
        T = SetSpec.integers([p ** k for k in range(5)])
        assert build_lcm_matrix(T) == build_max_matrix(T)
        assert build_gcd_matrix(T) == build_min_matrix(T)


def test_rational_and_float_elements():
    S = SetSpec.reals([Fraction(1, 2), 2, 1.5])
    assert S.kind is SetKind.REAL
    assert build_max_matrix(S)[0, 1] == 2
    assert build_min_matrix(S)[0, 2] == Fraction(1, 2)
    assert isinstance(build_min_matrix(S)[2, 2], float)


@pytest.mark.parametrize("bad", [[], [0, 1], [-3], [1, 1], [2, 3, 2]])
def test_invalid_integer_sets(bad):
    with pytest.raises(InvalidSet):
        SetSpec.integers(bad)


def test_integer_set_rejects_non_integers():
    with pytest.raises(InvalidSet):
        SetSpec.integers([1, 2.5])
    with pytest.raises(InvalidSet):
        SetSpec.integers([True, 2])
    with pytest.raises(InvalidSet):
        build_gcd_matrix(SetSpec.reals([1.5, 2]))


def test_real_set_rejects_nonpositive_and_duplicates():
    with pytest.raises(InvalidSet):
        SetSpec.reals([0.0, 1.0])
    with pytest.raises(InvalidSet):
        SetSpec.reals([1, Fraction(2, 2)])
    with pytest.raises(InvalidSet):
        SetSpec.reals([float("nan")])


def test_permute_conjugate_examples():
    X = BigIntMatrix([[1, 2], [2, 2]])
    assert permute_conjugate(X, Permutation.identity(2)) == X
    assert permute_conjugate(X, Permutation((2, 1))).tolist() == [[2, 2], [2, 1]]
    T = SetSpec.range(1, 4)
    Y = build_lcm_matrix(T) + build_gcd_matrix(T)
    assert bareiss_determinant(permute_conjugate(Y, Permutation((3, 1, 4, 2)))) == bareiss_determinant(Y) == 0


def test_permute_conjugate_index_formula():
    X = BigIntMatrix([[10 * i + j for j in range(3)] for i in range(3)])
    sigma = Permutation((3, 1, 2))
    Y = permute_conjugate(X, sigma)
    for i in range(1, 4):
        for j in range(1, 4):
            assert Y[i - 1, j - 1] == X[sigma(i) - 1, sigma(j) - 1]


def test_permutation_validation():
    with pytest.raises(InvalidParameter):
        Permutation((1, 1, 2))
    with pytest.raises(InvalidParameter):
        Permutation((0, 1))
    with pytest.raises(DimensionMismatch):
        permute_conjugate(BigIntMatrix([[1]]), Permutation((2, 1)))


def test_matrix_must_be_square():
    with pytest.raises(DimensionMismatch):
        BigIntMatrix([[1, 2], [3]])


@given(int_sets)
def test_constructed_matrices_symmetric_with_set_diagonal(T):
    for build in (build_max_matrix, build_min_matrix, build_gcd_matrix, build_lcm_matrix):
        X = build(T)
        assert X.is_symmetric()
        assert [X[i, i] for i in range(T.order)] == list(T.elements)
        assert all(v > 0 for row in X for v in row)


@given(int_sets)
def test_entrywise_duality(T):
    M, N = build_max_matrix(T), build_min_matrix(T)
    L, G = build_lcm_matrix(T), build_gcd_matrix(T)
    t = T.elements
    for i in range(T.order):
        for j in range(T.order):
            assert M[i, j] >= N[i, j]
            assert L[i, j] * G[i, j] == t[i] * t[j]


@given(int_sets, st.randoms(use_true_random=False))
def test_determinant_permutation_invariance(T, rng):
    X = build_lcm_matrix(T) + build_gcd_matrix(T)
    sigma = Permutation.random(T.order, rng)
    assert bareiss_determinant(permute_conjugate(X, sigma)) == bareiss_determinant(X)


@pytest.mark.parametrize("n", range(1, 9))
def test_smith_determinant(n):
    G = build_gcd_matrix(SetSpec.range(1, n))
    expected = math.prod(totient(k) for k in range(1, n + 1))
    if n <= 7:
        assert leibniz_det(G.tolist()) == expected
    assert bareiss_determinant(G) == expected


def test_unsorted_input_kept_in_order():
    T = SetSpec.integers([5, 1, 3])
    assert build_gcd_matrix(T).tolist()[0] == [5, 1, 1]
    shuffled = SetSpec.range(1, 6).shuffled(random.Random(3))
    assert sorted(shuffled.elements) == [1, 2, 3, 4, 5, 6]
