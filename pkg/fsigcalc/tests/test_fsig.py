from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from fsigcalc.arith.field import PrimeField
from fsigcalc.exceptions import DomainError, HypothesisViolation, VerificationFailure
from fsigcalc.fsig.nvol import corollary_b_check, nvol_simple
from fsigcalc.fsig.piecewise import PiecewiseFn
from fsigcalc.fsig.signature import (
    convergence_rows,
    cover_exponents,
    empirical_fsig,
    fpt_sanity,
    fsig_at_p,
    fsig_monomial,
    limit_fsig_general,
    limit_fsig_rational_exponents,
    limit_fsig_simple,
    limit_hk_multiplicity,
    limit_via_cover,
    non_stabilization_witness,
    t_grid,
)
from fsigcalc.fsig.thresholds import INF, ThresholdInfo, lct_general, lct_simple, reciprocal
from fsigcalc.oracle.rank import fsig_oracle
from fsigcalc.poly.polynomial import power_xy


@pytest.fixture
def cusp_limit():
    return limit_fsig_general(1, 0, 1, 2, 3)


# Threshold tests
def test_reciprocal_and_infinity():
    assert reciprocal(4) == Fraction(1, 4)
    assert reciprocal(0) is INF
    assert INF > Fraction(10 ** 9)
    assert min(INF, Fraction(1, 3)) == Fraction(1, 3)
    with pytest.raises(DomainError):
        reciprocal(-1)


@pytest.mark.parametrize("a, b, c, lam", [
    (1, 1, 1, Fraction(2, 3)),
    (2, 1, 0, Fraction(1, 2)),
    (3, 1, 1, Fraction(1, 3)),
])
def test_lct_simple(a, b, c, lam):
    assert lct_simple(a, b, c).lam == lam


def test_lct_general(cusp_limit):
    info = lct_general(1, 0, 1, 2, 3)
    assert info.lam == Fraction(5, 9)
    assert info.components['1/b'] is INF
    assert cusp_limit.lam == info.lam


def test_lct_simple_records_every_candidate():
    info = lct_simple(3, 1, 0)
    assert info.components == {'1/a': Fraction(1, 3), '1/b': Fraction(1), '1/c': INF}
    assert info.lam == Fraction(1, 3)
    assert set(info.to_dict()['components']) == {'1/a', '1/b', '1/c'}


def test_lct_domain():
    with pytest.raises(DomainError):
        lct_simple(1, 2, 0)
    with pytest.raises(DomainError):
        lct_general(0, 0, 0)
    with pytest.raises(DomainError):
        lct_general(1, 1, 1, u=0)


def test_threshold_info_checks_minimum():
    with pytest.raises(DomainError):
        ThresholdInfo(lam=Fraction(1), lambda_0=Fraction(1, 2))


# Piecewise tests
def test_piecewise_merges_equal_pieces():
    fn = PiecewiseFn.build([0, Fraction(1, 2), 1], [(1, -2, 1), (1, -2, 1)])
    assert fn.breakpoints == (0, 1)
    assert fn(Fraction(1, 2)) == Fraction(1, 4)
    assert fn(2) == 0
    assert fn.right_derivative(0) == -2
    assert fn.check_invariants()


def test_piecewise_continuity():
    with pytest.raises(VerificationFailure):
        PiecewiseFn.build([0, Fraction(1, 2), 1], [(1, -1, 0), (1, -2, 1)])


def test_piecewise_convexity_violation():
    fn = PiecewiseFn.build([0, 1], [(1, 0, -1)])
    with pytest.raises(VerificationFailure) as excinfo:
        fn.check_invariants()
    assert excinfo.value.check == "midpoint convexity"


def test_piecewise_rejects_negative_t():
    with pytest.raises(DomainError):
        limit_fsig_simple(1, 1, 1)(-1)


def test_piecewise_serialization(cusp_limit):
    data = cusp_limit.to_dict()
    assert data['breakpoints'] == ["0", "1/9", "5/9"]
    assert PiecewiseFn.from_dict(data) == cusp_limit


# Fixed-p tests
def test_fsig_monomial():
    assert fsig_monomial(1, 0, Fraction(1, 2)) == Fraction(1, 2)
    assert fsig_monomial(2, 1, Fraction(1, 4)) == Fraction(3, 8)
    assert fsig_monomial(0, 0, 5) == 1
    assert fsig_monomial(2, 1, Fraction(1, 2)) == 0


@pytest.mark.parametrize("a, b, c, p, r, expected", [
    (1, 1, 1, 7, 3, Fraction(6, 49)),
    (2, 1, 0, 7, 2, Fraction(15, 49)),
    (0, 1, 2, 7, 2, Fraction(15, 49)),
    (1, 1, 1, 7, 0, Fraction(1)),
])
def test_fsig_at_p(a, b, c, p, r, expected):
    assert fsig_at_p(a, b, c, p, r) == expected


@pytest.mark.parametrize("a, b, c, p", [(1, 1, 1, 7), (2, 1, 0, 7), (1, 1, 0, 11), (2, 1, 1, 11)])
def test_fsig_at_p_matches_rank_oracle(a, b, c, p):
    g = power_xy(a, b, c, 1, 1, 1, PrimeField(p))
    lam = lct_simple(*sorted((a, b, c), reverse=True)).lam
    for r in range(p):
        if Fraction(r, p) >= lam:
            break
        assert fsig_at_p(a, b, c, p, r) == fsig_oracle(g, p, r, weights=(1, 1))


def test_fsig_at_p_errors():
    with pytest.raises(HypothesisViolation):
        fsig_at_p(1, 1, 1, 7, 5)
    with pytest.raises(DomainError):
        fsig_at_p(1, 1, 1, 8, 1)
    with pytest.raises(DomainError):
        fsig_at_p(1, 1, 1, 7, -1)


def test_empirical_fsig():
    assert empirical_fsig(1, 1, 1, 1, 1, 7, 3) == Fraction(6, 49)
    assert empirical_fsig(1, 0, 1, 2, 3, 7, 0) == 1
    assert 0 < empirical_fsig(1, 0, 1, 2, 3, 7, 1) < 1


@given(a=st.integers(0, 3), b=st.integers(0, 3), c=st.integers(0, 3), p=st.sampled_from([7, 11, 13, 31]))
@settings(max_examples=60, deadline=None)
def test_fsig_at_p_non_increasing_in_r(a, b, c, p):
    assume(a or b or c)
    lam = lct_simple(*sorted((a, b, c), reverse=True)).lam
    values = [fsig_at_p(a, b, c, p, r) for r in range(p) if Fraction(r, p) < lam]
    assert values[0] == 1
    assert all(0 <= value <= 1 for value in values)
    assert all(x >= y for x, y in zip(values, values[1:]))
    if p == 7:
        g = power_xy(a, b, c, 1, 1, 1, PrimeField(p))
        assert values == [fsig_oracle(g, p, r, weights=(1, 1)) for r in range(len(values))]


def test_empirical_fsig_non_increasing():
    values = [empirical_fsig(1, 0, 1, 2, 3, 7, r) for r in range(7)]
    assert values[0] == 1
    assert all(x >= y for x, y in zip(values, values[1:]))


def test_non_stabilization_witness():
    p, r, value, limit = non_stabilization_witness(1, 1, 1)
    assert (p, r) == (2, 1)
    assert value == 0
    assert limit == Fraction(1, 16)
    assert non_stabilization_witness(2, 1, 0, max_p=13) is None


def test_fpt_sanity():
    assert fpt_sanity(1, 1, 1, 7) == [5, 6, 7]


# Limit tests
def test_limit_fsig_simple():
    fn = limit_fsig_simple(1, 1, 1)
    assert fn(Fraction(1, 3)) == Fraction(1, 4)
    assert fn(Fraction(2, 3)) == 0
    assert limit_hk_multiplicity(fn) == 3


def test_cusp_limit_pieces(cusp_limit):
    assert cusp_limit.breakpoints == (0, Fraction(1, 9), Fraction(5, 9))
    assert cusp_limit(Fraction(1, 9)) == Fraction(2, 3)
    assert cusp_limit(Fraction(1, 18)) == Fraction(5, 6)
    assert limit_hk_multiplicity(cusp_limit) == 3
    assert cusp_limit.check_invariants()


def test_limit_general_without_binomial_factor():
    fn = limit_fsig_general(2, 1, 0, 3, 5)
    assert fn(Fraction(1, 4)) == fsig_monomial(2, 1, Fraction(1, 4))


@given(a=st.integers(0, 3), b=st.integers(0, 3), c=st.integers(0, 3),
       u=st.integers(1, 3), v=st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_limit_matches_cover(a, b, c, u, v):
    assume(a or b or c)
    fn = limit_fsig_general(a, b, c, u, v)
    assert fn.check_invariants()
    for t in fn.sample_grid(12):
        assert fn(t) == limit_via_cover(a, b, c, u, v, t)


@given(a=st.integers(0, 4), b=st.integers(0, 4), c=st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_limit_general_reduces_to_simple(a, b, c):
    assume(a or b or c)
    general = limit_fsig_general(a, b, c)
    simple = limit_fsig_simple(*sorted((a, b, c), reverse=True))
    assert general.agrees_with(simple, simple.sample_grid(16))


@pytest.mark.parametrize("r1, r2, r3, expected", [
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 16)),
    (1, 0, 0, 0),
    (Fraction(3, 4), Fraction(1, 2), 0, Fraction(1, 8)),
])
def test_limit_rational_exponents(r1, r2, r3, expected):
    assert limit_fsig_rational_exponents(r1, r2, r3) == expected


def test_limit_rational_exponents_needs_sorted():
    with pytest.raises(DomainError):
        limit_fsig_rational_exponents(Fraction(1, 4), Fraction(1, 2), 0)


def test_cover_exponents():
    t = Fraction(1, 18)
    assert cover_exponents(1, 0, 1, 2, 3, t) == (Fraction(2, 3), Fraction(19, 36), Fraction(1, 18))
    assert limit_via_cover(1, 0, 1, 2, 3, t) == Fraction(5, 6)


# Normalized volume tests
@pytest.mark.parametrize("a, b, c, t, expected", [
    (1, 1, 1, Fraction(1, 2), Fraction(1, 4)),
    (3, 1, 1, Fraction(1, 4), Fraction(1, 2)),
    (1, 1, 1, 1, 0),
])
def test_nvol_simple(a, b, c, t, expected):
    assert nvol_simple(a, b, c, t) == expected
    assert corollary_b_check(a, b, c, t)


def test_nvol_domain():
    with pytest.raises(DomainError):
        nvol_simple(1, 1, 1, -1)


# Convergence tests
def test_t_grid():
    assert t_grid(Fraction(1), 3) == [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    with pytest.raises(DomainError):
        t_grid(Fraction(1), 0)


def test_convergence_rows():
    rows = convergence_rows(1, 1, 1, 1, 1, [31], 2)
    assert [row.t_grid for row in rows] == [Fraction(2, 9), Fraction(4, 9)]
    first = rows[0]
    assert first.t == Fraction(6, 31)
    assert first.psi_p == Fraction(484, 961)
    assert first.psi_limit == Fraction(4, 9)
    assert first.abs_diff == Fraction(512, 8649)
    assert first.to_dict()['abs_diff'] == "0.059197595098"
    assert all(row.abs_diff <= Fraction(10, 31) for row in rows)
