from itertools import permutations

import pytest
from hypothesis import assume, given, settings, strategies as st

from fsigcalc.algorithms.closed_basis import IdealSpec
from fsigcalc.algorithms.lengths import (
    LengthRoute,
    check_wlp,
    graded_dimension,
    length_general,
    length_oracle,
    length_shift,
    length_simple,
    length_wlp,
    length_wlp_closed,
    length_wlp_socle,
    staircase_colength,
)
from fsigcalc.algorithms.staircase import colength, staircase_ideal
from fsigcalc.arith.field import PrimeField
from fsigcalc.exceptions import DomainError, HypothesisViolation
from fsigcalc.oracle.rank import length_rank
from fsigcalc.poly.polynomial import power_xy


# Staircase tests
@given(alpha=st.integers(0, 8), beta=st.integers(0, 8), eta=st.integers(0, 8))
@settings(max_examples=80, deadline=None)
def test_staircase_formula_matches_count(alpha, beta, eta):
    assume(beta <= alpha)
    assert staircase_colength(alpha, beta, eta) == colength(staircase_ideal(alpha, beta, eta))


# Simple length tests
@pytest.mark.parametrize("k, m, n, expected, tag", [
    (3, 2, 2, 4, "d"),
    (2, 2, 2, 3, "d"),
    (1, 1, 5, 1, "a"),
    (6, 2, 3, 6, "b"),
    (1, 4, 2, 2, "c"),
])
def test_length_simple(k, m, n, expected, tag):
    result = length_simple(k, m, n)
    assert result.value == expected
    assert result.case_tag == tag
    assert result.route is LengthRoute.SIMPLE_FORMULA


@given(k=st.integers(0, 6), m=st.integers(1, 6), n=st.integers(1, 6))
@settings(max_examples=60, deadline=None)
def test_length_simple_matches_rank(k, m, n):
    f = power_xy(0, 0, 1, 1, 1, 1)
    assert length_simple(k, m, n).value == length_rank(m, n, f, k, weights=(1, 1))


@given(k=st.integers(0, 7), m=st.integers(0, 7), n=st.integers(0, 7))
@settings(max_examples=60, deadline=None)
def test_length_simple_is_symmetric(k, m, n):
    values = {length_simple(*order).value for order in permutations((k, m, n))}
    assert len(values) == 1
    if m and n:
        f = power_xy(0, 0, 1, 1, 1, 1)
        assert values == {length_rank(m, n, f, k, weights=(1, 1))}


@given(k=st.integers(0, 8), m=st.integers(0, 8), n=st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_length_simple_non_decreasing(k, m, n):
    base = length_simple(k, m, n).value
    assert base <= length_simple(k + 1, m, n).value
    assert base <= length_simple(k, m + 1, n).value
    assert base <= length_simple(k, m, n + 1).value


def test_length_simple_in_characteristic_p():
    f = power_xy(0, 0, 1, 1, 1, 1, PrimeField(7))
    assert length_simple(4, 3, 3, PrimeField(7)).value == length_rank(3, 3, f, 4)


def test_length_simple_hypothesis():
    with pytest.raises(HypothesisViolation) as excinfo:
        length_simple(2, 3, 3, PrimeField(3))
    assert "min(m+k, m+n, n+k) <= p" in str(excinfo.value)


def test_length_simple_domain():
    with pytest.raises(DomainError):
        length_simple(-1, 2, 2)


# Shift tests
def test_length_shift():
    assert length_shift(5, 5, 1, 1, 13) == 22
    assert length_shift(4, 4, 4, 0, 7) == 16
    with pytest.raises(DomainError):
        length_shift(4, 4, -1, 0, 0)


# General length tests
@pytest.mark.parametrize("M, K, a, b, c, expected, tag", [
    (5, 1, 1, 1, 1, 13, "d"),
    (5, 2, 2, 0, 0, 20, "a"),
    (3, 3, 1, 1, 1, 9, "b"),
    (6, 1, 0, 3, 1, 21, "c"),
])
def test_length_general(M, K, a, b, c, expected, tag):
    result = length_general(IdealSpec(M=M, N=M, K=K, a=a, b=b, c=c))
    assert result.value == expected
    assert result.case_tag == tag
    assert result.route is LengthRoute.GENERAL_FORMULA


@given(M=st.integers(1, 7), K=st.integers(1, 3), a=st.integers(0, 3), b=st.integers(0, 3), c=st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_length_general_matches_rank(M, K, a, b, c):
    assume(a * K <= M and b * K <= M)
    spec = IdealSpec(M=M, N=M, K=K, a=a, b=b, c=c)
    assert length_general(spec).value == length_oracle(spec).value


def test_length_general_shift_consistency():
    spec = IdealSpec(M=5, N=5, K=1, a=1, b=1, c=1)
    inner = length_simple(1, 4, 4).value
    assert length_shift(5, 5, 1, 1, inner) == length_general(spec).value


def test_length_general_needs_square_box():
    with pytest.raises(DomainError):
        length_general(IdealSpec(M=4, N=3, K=1, a=1, b=1, c=1))


def test_length_general_hypotheses():
    with pytest.raises(HypothesisViolation):
        length_general(IdealSpec(M=3, N=3, K=2, a=2, b=0, c=1))


def test_length_general_permutes_at_m_equal_p():
    spec = IdealSpec(M=5, N=5, K=1, a=1, b=0, c=2, field=PrimeField(5))
    result = length_general(spec)
    assert any(h.inequality.startswith("permuted") for h in result.hypotheses)
    assert result.value == length_oracle(spec).value


# Weak Lefschetz route tests
@pytest.mark.parametrize("k, m, n, p, tag", [
    (3, 3, 3, 7, "a"),
    (4, 3, 3, 7, "a"),
    (1, 1, 1, 7, "b"),
    (3, 2, 2, 7, "b"),
])
def test_length_wlp_matches_simple(k, m, n, p, tag):
    result = length_wlp(k, m, n, p)
    assert result.case_tag == tag
    assert result.value == length_simple(k, m, n, PrimeField(p)).value
    assert result.value == length_wlp_closed(k, m, n) == length_wlp_socle(k, m, n)


def test_graded_dimension():
    assert graded_dimension(3, (3, 3, 3)) == 7
    assert graded_dimension(0, (1, 1, 1)) == 1
    assert graded_dimension(-1, (2, 2, 2)) == 0


def test_check_wlp():
    assert check_wlp(3, 3, 3, 7).holds
    assert not check_wlp(5, 3, 3, 7).holds


def test_length_wlp_errors():
    with pytest.raises(DomainError):
        length_wlp(3, 3, 3, 8)
    with pytest.raises(HypothesisViolation):
        length_wlp(5, 3, 3, 7)


# Oracle route tests
def test_length_oracle():
    result = length_oracle(IdealSpec.simple(3, 2, 2))
    assert result.value == 4
    assert result.route is LengthRoute.ORACLE
    assert result.to_dict()['route'] == "Oracle"


@given(M=st.integers(1, 5), N=st.integers(1, 5), K=st.integers(0, 3),
       a=st.integers(0, 2), b=st.integers(0, 2), c=st.integers(0, 2))
@settings(max_examples=40, deadline=None)
def test_colength_non_decreasing_in_exponents(M, N, K, a, b, c):
    base = length_oracle(IdealSpec(M, N, K, a, b, c)).value
    assert base <= length_oracle(IdealSpec(M + 1, N, K, a, b, c)).value
    assert base <= length_oracle(IdealSpec(M, N + 1, K, a, b, c)).value
    assert base <= length_oracle(IdealSpec(M, N, K + 1, a, b, c)).value


def test_zero_outer_exponent():
    spec = IdealSpec(M=5, N=5, K=0, a=1, b=1, c=1)
    assert length_general(spec).value == 0
    assert length_oracle(spec).value == 0
    assert length_simple(0, 3, 2).value == 0
