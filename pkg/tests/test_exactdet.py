import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gpencil import exactdet
from gpencil.errors import (
    DimensionMismatch,
    InternalConsistencyError,
    InvalidParameter,
)
from gpencil.exactdet import (
    IntPolynomial,
    SurdValue,
    Verdict,
    bareiss_determinant,
    hadamard_bits,
    modular_primes,
    modular_zero_test,
    pencil_charpoly,
    poly_eval_integer,
    poly_eval_surd,
    primes_for_certificate,
    root_multiplicity,
)
from gpencil.setmatrix import SetSpec, build_gcd_matrix, build_lcm_matrix

from conftest import leibniz_det

small_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=n, max_size=n))
polys = st.lists(st.integers(-30, 30), min_size=1, max_size=7).map(IntPolynomial)


def lcm_gcd(n):
    T = SetSpec.range(1, n)
    return build_lcm_matrix(T), build_gcd_matrix(T)


@given(small_matrices)
def test_bareiss_matches_leibniz(rows):
    assert bareiss_determinant(rows) == leibniz_det(rows)


def test_bareiss_edge_cases():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[7]]) == 7
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    big = [[2 ** 200 + i * j for j in range(4)] for i in range(4)]
    assert bareiss_determinant(big) == sympy.Matrix(big).det()


def test_bareiss_rejects_bad_input():
    with pytest.raises(InvalidParameter):
        bareiss_determinant([[1.5]])
    with pytest.raises(DimensionMismatch):
        bareiss_determinant([[1, 2]])


@given(small_matrices)
def test_hadamard_bound_holds(rows):
    d = bareiss_determinant(rows)
    assert abs(d) <= 2 ** hadamard_bits(rows)


def test_polynomial_arithmetic():
    p = IntPolynomial.from_roots([1, -2], lead=3)
    assert p.coeffs == (-6, 3, 3)
    assert p.degree == 2 and p.leading == 3
    assert (p - p).is_zero()
    assert IntPolynomial((0, 0)).degree == -1
    assert (p * p).coeffs == tuple(sympy.Poly((3 * (sympy.Symbol("x") - 1) * (sympy.Symbol("x") + 2)) ** 2).all_coeffs()[::-1])
    assert p(2) == 12 and poly_eval_integer(p, 2) == 12
    q, r = p.divide_linear(2)
    assert r == 12 and (q * IntPolynomial((-2, 1)) + r) == p
    assert str(IntPolynomial((960, 2880, 2480, 528, -48, -16))) == \
        "-16*x^5 - 48*x^4 + 528*x^3 + 2480*x^2 + 2880*x + 960"


@given(polys, st.integers(-10, 10))
def test_divide_linear_reconstructs(p, r):
    q, rem = p.divide_linear(r)
    assert q * IntPolynomial((-r, 1)) + rem == p
    assert rem == p(r)


@given(polys, st.integers(-5, 5), st.integers(0, 4))
def test_root_multiplicity_of_constructed_root(p, r, k):
    if p.is_zero():
        return
    # strip any existing factor (x - r) so the multiplicity is known
    while p.divide_linear(r)[1] == 0:
        p = p.exact_divide_linear(r)
    f = p * IntPolynomial((-r, 1)) ** k
    assert root_multiplicity(f, r) == k


def test_root_multiplicity_zero_polynomial():
    with pytest.raises(InvalidParameter):
        root_multiplicity(IntPolynomial(), 1)


@given(polys, st.integers(2, 50))
def test_surd_evaluation_matches_sympy(p, m):
    if math.isqrt(m) ** 2 == m:
        with pytest.raises(InvalidParameter):
            poly_eval_surd(p, m)
        return
    v = poly_eval_surd(p, m)
    expected = sympy.expand(sympy.Integer(0) + sum(c * sympy.sqrt(m) ** i for i, c in enumerate(p.coeffs)))
    assert sympy.expand(v.rational + v.surd * sympy.sqrt(m) - expected) == 0
    assert v.is_zero() == (expected == 0)


def test_surd_value_rejects_square_radicand():
    with pytest.raises(InvalidParameter):
        SurdValue(1, 1, 4)


def sympy_charpoly(A, B):
    x = sympy.Symbol("x")
    M = sympy.Matrix(A.tolist()) - x * sympy.Matrix(B.tolist())
    return tuple(int(c) for c in sympy.Poly(M.det(method="berkowitz"), x).all_coeffs()[::-1])


@pytest.mark.parametrize("n", range(1, 8))
def test_charpoly_matches_sympy(n):
    L, G = lcm_gcd(n)
    assert pencil_charpoly(L, G).coeffs == sympy_charpoly(L, G)


@given(st.lists(st.integers(1, 40), min_size=1, max_size=5, unique=True))
@settings(max_examples=40, deadline=None)
def test_charpoly_degree_and_values(ts):
    T = SetSpec.integers(ts)
    L, G = build_lcm_matrix(T), build_gcd_matrix(T)
    p = pencil_charpoly(L, G)
    n = len(ts)
    assert p.degree == n
    assert p.leading == (-1) ** n * bareiss_determinant(G)
    for x in (-3, 7):
        assert p(x) == bareiss_determinant((L - G.scaled(x)).rows)


def test_interpolation_remainder_is_reported(monkeypatch):
    calls = iter([1, 0, 0, 0])
    monkeypatch.setattr(exactdet, "bareiss_determinant", lambda _: next(calls))
    with pytest.raises(InternalConsistencyError):
        pencil_charpoly([[1, 0], [0, 1]], [[1, 0], [0, 1]])


def test_charpoly_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        pencil_charpoly([[1]], [[1, 0], [0, 1]])


def test_modular_primes_are_deterministic_primes():
    ps = modular_primes(20, seed=7)
    assert ps == modular_primes(20, seed=7)
    assert ps[:5] == modular_primes(5, seed=7)
    assert ps != modular_primes(20, seed=8)
    assert len(set(ps)) == 20 and ps == sorted(ps)
    for p in ps:
        assert 2 ** 60 < p < 2 ** 62 and sympy.isprime(p)


def test_certificate_prime_count():
    for bits in (0, 60, 61, 500, 5000):
        k = primes_for_certificate(bits)
        assert math.prod(modular_primes(k)) > 2 * 2 ** bits
        if k > 1:
            assert math.prod(modular_primes(k - 1)) <= 2 * 2 ** bits


def test_zero_test_on_lcm_plus_gcd():
    for n in range(1, 13):
        L, G = lcm_gcd(n)
        M = L + G
        exact = bareiss_determinant(M)
        v = modular_zero_test(M, certify=True)
        assert v.is_zero == (exact == 0)
        if exact:
            assert v.verdict is Verdict.CERTIFIED_NONZERO and exact % v.witness != 0
        else:
            assert v.verdict is Verdict.CERTIFIED_ZERO and v.witness is None
        assert modular_zero_test(M).verdict in (Verdict.CERTIFIED_NONZERO, Verdict.PROBABLY_ZERO)


def test_zero_test_catches_multiple_of_every_prime():
    # a 1x1 matrix whose entry vanishes modulo the first two stream primes
    entry = modular_primes(2)[0] * modular_primes(2)[1]
    assert modular_zero_test([[entry]], num_primes=2).verdict is Verdict.PROBABLY_ZERO
    assert modular_zero_test([[entry]], num_primes=3).verdict is Verdict.CERTIFIED_NONZERO
    assert modular_zero_test([[entry]], num_primes=1, certify=True).verdict is Verdict.CERTIFIED_NONZERO


@given(st.integers(1, 6), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_zero_test_agrees_with_exact(n, rng):
    rows = [[rng.randint(-2 ** 80, 2 ** 80) for _ in range(n)] for _ in range(n)]
    if rng.random() < 0.5 and n > 1:
        rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % n])]
    exact = bareiss_determinant(rows)
    v = modular_zero_test(rows, certify=True)
    assert v.is_zero == (exact == 0)


def test_zero_test_parameter_check():
    with pytest.raises(InvalidParameter):
        modular_zero_test([[1]], num_primes=0)


def test_verdict_dict():
    d = modular_zero_test([[2]], certify=True).to_dict()
    assert d["verdict"] == "CertifiedNonZero" and d["primes_used"] == 1
