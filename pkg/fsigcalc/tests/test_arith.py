from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fsigcalc.arith.binomial import (
    binom,
    binom_matrix,
    det_binomial_formula,
    det_binomial_naive,
    det_binomial_nonzero_mod,
)
from fsigcalc.arith.field import QQ, PrimeField, parse_field
from fsigcalc.arith.linalg import bareiss_determinant, bareiss_rank, integer_rows, rank_mod_p
from fsigcalc.config import worker_count
from fsigcalc.exceptions import ConfigError, DivisionByZero, DomainError


@pytest.fixture
def f7():
    return PrimeField(7)


# Field tests
def test_rational_field_is_singleton():
    assert parse_field("q") is QQ
    assert parse_field(" QQ ") is QQ
    assert QQ.characteristic == 0


def test_prime_field_arithmetic(f7):
    assert f7.add(5, 4) == 2
    assert f7.sub(2, 5) == 4
    assert f7.mul(3, 5) == 1
    assert f7.inv(3) == 5
    assert f7.div(1, 3) == 5
    assert f7.neg(0) == 0


def test_prime_field_converts_fractions(f7):
    assert f7.convert(Fraction(1, 2)) == 4
    assert f7.convert(-1) == 6
    with pytest.raises(DivisionByZero):
        f7.convert(Fraction(1, 7))


def test_inverse_of_zero(f7):
    with pytest.raises(DivisionByZero):
        f7.inv(0)
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))


@pytest.mark.parametrize("bad", [1, 4, 2 ** 31 + 11])
def test_prime_field_rejects_non_primes(bad):
    with pytest.raises(DomainError):
        PrimeField(bad)


@pytest.mark.parametrize("text", ["p=4", "p=x", "r"])
def test_parse_field_errors(text):
    with pytest.raises(DomainError):
        parse_field(text)


def test_parse_prime_field():
    assert parse_field("p=101") == PrimeField(101)


# Binomial tests
def test_binom_edges():
    assert binom(5, 2) == 10
    assert binom(5, -1) == 0
    assert binom(5, 6) == 0
    assert binom(0, 0) == 1
    with pytest.raises(DomainError):
        binom(-1, 0)


def test_binom_large_row_is_exact():
    assert binom(60, 30) == 118264581564861424


def test_binom_matrix_shape():
    assert binom_matrix(3, 1, 0) == [[3, 3], [1, 3]]


@pytest.mark.parametrize("k, a, v, expected", [
    (3, 1, 0, 6),
    (3, 1, -1, 3),
    (4, 2, 1, 105),
])
def test_det_binomial(k, a, v, expected):
    assert det_binomial_formula(k, a, v) == expected
    assert det_binomial_naive(k, a, v) == expected


@given(k=st.integers(0, 9), a=st.integers(0, 9), v=st.integers(-1, 4))
@settings(max_examples=60, deadline=None)
def test_det_formula_matches_elimination(k, a, v):
    if a > k or a + v < 0:
        with pytest.raises(DomainError):
            det_binomial_formula(k, a, v)
        return
    assert det_binomial_formula(k, a, v) == det_binomial_naive(k, a, v)


def test_det_nonzero_mod():
    assert det_binomial_nonzero_mod(3, 1, 0, 5)
    assert not det_binomial_nonzero_mod(3, 1, 0, 3)


def test_det_formula_on_full_grid():
    for k in range(13):
        for a in range(k + 1):
            for v in range(-a, 9 - a):
                assert det_binomial_formula(k, a, v) == det_binomial_naive(k, a, v)
                for p in (31, 101):
                    if k + a + v < p:
                        assert det_binomial_nonzero_mod(k, a, v, p)


def test_det_domain():
    with pytest.raises(DomainError):
        det_binomial_formula(2, 3, 0)
    with pytest.raises(DomainError):
        binom_matrix(3, 1, -3)


# Linear algebra tests
def test_bareiss_determinant():
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([]) == 1


def test_bareiss_rank():
    assert bareiss_rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    assert bareiss_rank([]) == 0


def test_rank_mod_p_drops_in_small_characteristic():
    matrix = [[1, 1], [1, 3]]
    assert rank_mod_p(matrix, 5) == 2
    assert rank_mod_p(matrix, 2) == 1


def test_rank_mod_p_rejects_bad_modulus():
    with pytest.raises(DomainError):
        rank_mod_p([[1]], 1)


def test_integer_rows_clears_denominators():
    rows = integer_rows([[Fraction(1, 2), Fraction(1, 3)], [1, 0]])
    assert rows == [[3, 2], [6, 0]]
    assert bareiss_rank(rows) == 2


# Config tests
def test_worker_count_default(monkeypatch):
    monkeypatch.delenv("FSIG_THREADS", raising=False)
    assert worker_count() == 1


def test_worker_count_from_env(monkeypatch):
    monkeypatch.setenv("FSIG_THREADS", "3")
    assert worker_count() == 3


@pytest.mark.parametrize("raw", ["0", "-2", "many"])
def test_worker_count_invalid(monkeypatch, raw):
    monkeypatch.setenv("FSIG_THREADS", raw)
    with pytest.raises(ConfigError):
        worker_count()
