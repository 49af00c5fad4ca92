# fsigcalc/cli/verify.py
"""Cross-checks of every closed form against the independent oracles."""
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Sequence

from fsigcalc.algorithms.closed_basis import IdealSpec, closed_groebner, f_closed, f_recursive, truncated_basis
from fsigcalc.algorithms.lengths import (
    check_simple_length,
    check_wlp,
    length_general,
    length_shift,
    length_simple,
    length_wlp,
    staircase_colength,
)
from fsigcalc.algorithms.staircase import colength, staircase_ideal
from fsigcalc.arith.binomial import det_binomial_formula, det_binomial_naive, det_binomial_nonzero_mod
from fsigcalc.arith.field import QQ, CoeffField, PrimeField
from fsigcalc.config import CONVERGENCE_CONSTANT, DEFAULT_VERIFY_PRIMES
from fsigcalc.exceptions import DomainError, HypothesisViolation, VerificationFailure
from fsigcalc.fsig.nvol import corollary_b_check
from fsigcalc.fsig.signature import (
    convergence_rows,
    fpt_sanity,
    fsig_at_p,
    limit_fsig_general,
    limit_fsig_simple,
    limit_via_cover,
    non_stabilization_witness,
)
from fsigcalc.fsig.thresholds import lct_simple
from fsigcalc.oracle.buchberger import buchberger, ideal_generators
from fsigcalc.oracle.rank import length_rank
from fsigcalc.poly.polynomial import normal_form, power_xy

logger = logging.getLogger(__name__)

SUITES = ("basis", "length", "fsig")
F_FAMILY_MAX_K = 10
DET_MAX_K = 12
DET_MAX_SIZE = 8
CONVERGENCE_SPECS = ((1, 1, 1, 1, 1), (3, 1, 1, 1, 1), (2, 1, 1, 1, 1), (1, 0, 1, 2, 3))


@dataclass
class SuiteResult:
    name: str
    checks: int
    elapsed: float

    def to_dict(self):
        return {'suite': self.name, 'checks': self.checks, 'elapsed': round(self.elapsed, 3)}


@dataclass
class VerifyReport:
    results: List[SuiteResult] = field(default_factory=list)

    @property
    def total_checks(self) -> int:
        return sum(r.checks for r in self.results)

    def render(self) -> List[str]:
        lines = [f"{r.name}: {r.checks} checks passed" for r in self.results]
        lines.append(f"all: {self.total_checks} checks passed")
        return lines


def _expect(check: str, params: Dict, expected, got) -> None:
    if expected != got:
        raise VerificationFailure(check, params, expected, got)


def _fields(primes: Sequence[int]) -> List[CoeffField]:
    return [QQ] + [PrimeField(p) for p in primes]


def _general_grid(max_size: int):
    k_max = max(1, min(4, max_size // 3))
    e_max = max(1, min(3, max_size // 2))
    for M, K in product(range(1, max_size + 1), range(1, k_max + 1)):
        for a, b, c in product(range(e_max + 1), repeat=3):
            yield M, K, a, b, c


# ---- basis ----------------------------------------------------------------

def _vanishing_mod_p(poly, p: int) -> List:
    """Monomials of a poly over Q whose coefficient is 0 in F_p."""
    return [mono for mono, coeff in poly.items() if Fraction(coeff).numerator % p == 0]


def verify_f_family(max_size: int, primes: Sequence[int]) -> int:
    checks = 0
    k_max = min(F_FAMILY_MAX_K, max_size)
    for field_ in _fields(primes):
        p = field_.characteristic
        for k, m in product(range(1, k_max + 1), repeat=2):
            if m > k or (p and m + k > p):
                continue
            for s in range(1, 2 * m):
                params = {'s': s, 'k': k, 'm': m, 'field': field_}
                _expect("f recursion", params, f_closed(s, k, m, field_), f_recursive(s, k, m, field_))
                if p:
                    _expect("f coefficients nonzero mod p", params, [], _vanishing_mod_p(f_closed(s, k, m), p))
                checks += 1
    return checks


def verify_determinants(max_size: int, primes: Sequence[int]) -> int:
    checks = 0
    size_max = min(DET_MAX_SIZE, max_size)
    for k in range(min(DET_MAX_K, 2 * max_size) + 1):
        for a in range(k + 1):
            for v in range(-a, size_max - a + 1):
                params = {'k': k, 'a': a, 'v': v}
                _expect("binomial determinant", params, det_binomial_naive(k, a, v), det_binomial_formula(k, a, v))
                for p in primes:
                    if k + a + v < p:
                        _expect("determinant nonzero mod p", dict(params, p=p), True,
                                det_binomial_nonzero_mod(k, a, v, p))
                checks += 1
    return checks


def verify_basis(max_size: int, primes: Sequence[int]) -> int:
    checks = 0
    for field_ in _fields(primes):
        p = field_.characteristic
        specs = [IdealSpec.simple(k, m, n, field_)
                 for k, m, n in product(range(1, max_size + 1), repeat=3)]
        specs += [IdealSpec(M, M, K, a, b, c, field_) for M, K, a, b, c in _general_grid(max_size)]
        for spec in specs:
            if p and spec.M + (spec.c - spec.a) * spec.K > p:
                continue
            closed = closed_groebner(spec)
            oracle = buchberger(ideal_generators(spec))
            params = spec.to_dict()
            _expect("leading-term ideal", params, oracle.lt_ideal, closed.lt_ideal)
            for g in closed.generators:
                _expect("generator in ideal", params, 0, normal_form(g, oracle.generators))
            if spec.is_simple and spec.M <= spec.K:
                truncated = truncated_basis(spec.K, spec.M, spec.N, field_)
                _expect("truncated basis", params, closed.lt_ideal, truncated.lt_ideal)
            checks += 1
        logger.info("basis suite: %s done", field_)
    checks += verify_f_family(max_size, primes)
    checks += verify_determinants(max_size, primes)
    return checks


# ---- length ---------------------------------------------------------------

def verify_length(max_size: int, primes: Sequence[int]) -> int:
    checks = 0
    for alpha in range(max_size + 1):
        for beta, eta in product(range(alpha + 1), range(max_size + 1)):
            _expect("staircase colength", {'alpha': alpha, 'beta': beta, 'eta': eta},
                    colength(staircase_ideal(alpha, beta, eta)),
                    staircase_colength(alpha, beta, eta))
            checks += 1
    for field_ in _fields(primes):
        f = power_xy(0, 0, 1, 1, 1, 1, field_)
        for k, m, n in product(range(max_size + 1), range(1, max_size + 1), range(1, max_size + 1)):
            if not check_simple_length(k, m, n, field_).holds:
                continue
            _expect("simple length", {'k': k, 'm': m, 'n': n, 'field': field_},
                    length_rank(m, n, f, k, weights=(1, 1)), length_simple(k, m, n, field_).value)
            checks += 1
        for M, K, a, b, c in _general_grid(max_size):
            spec = IdealSpec(M, M, K, a, b, c, field_)
            try:
                formula = length_general(spec).value
            except HypothesisViolation:
                continue
            params = spec.to_dict()
            _expect("general length", params,
                    length_rank(M, M, spec.base_polynomial(), K, weights=(1, 1)), formula)
            if field_.characteristic != M:
                inner = length_simple(c * K, max(M - a * K, 0), max(M - b * K, 0), field_).value
                _expect("shifted length", params, formula, length_shift(M, M, a * K, b * K, inner))
            checks += 1
        logger.info("length suite: %s done", field_)
    for p in primes:
        for k, m, n in product(range(max_size + 1), repeat=3):
            if not check_wlp(k, m, n, p).holds:
                continue
            _expect("wlp length", {'k': k, 'm': m, 'n': n, 'p': p},
                    length_simple(k, m, n, PrimeField(p)).value, length_wlp(k, m, n, p).value)
            checks += 1
    return checks


# ---- fsig -----------------------------------------------------------------

def _nonzero_triples(bound: int):
    for a, b, c in product(range(bound + 1), repeat=3):
        if a or b or c:
            yield a, b, c


def verify_fsig(max_size: int, primes: Sequence[int]) -> int:
    checks = 0
    bound = max(1, min(3, max_size))
    identity_primes = sorted({7, 11} | {p for p in primes if p <= 10 * max_size})
    for p in identity_primes:
        field_ = PrimeField(p)
        for a, b, c in _nonzero_triples(bound):
            f = power_xy(a, b, c, 1, 1, 1, field_)
            lam = lct_simple(*sorted((a, b, c), reverse=True)).lam
            for r in range(p):
                if Fraction(r, p) >= lam:
                    break
                oracle = 1 - Fraction(length_rank(p, p, f, r, weights=(1, 1)), p * p)
                _expect("psi_p identity", {'a': a, 'b': b, 'c': c, 'p': p, 'r': r},
                        oracle, fsig_at_p(a, b, c, p, r))
                checks += 1
        logger.info("fsig identity: p=%d done", p)

    for a, b, c in _nonzero_triples(bound):
        for u, v in product(range(1, bound + 1), repeat=2):
            params = {'a': a, 'b': b, 'c': c, 'u': u, 'v': v}
            fn = limit_fsig_general(a, b, c, u, v)
            fn.check_invariants()
            for t in fn.sample_grid(12):
                _expect("finite cover", dict(params, t=t), limit_via_cover(a, b, c, u, v, t), fn(t))
            if u == v == 1:
                simple = limit_fsig_simple(*sorted((a, b, c), reverse=True))
                for t in fn.sample_grid(12):
                    _expect("u = v = 1 reduction", dict(params, t=t), simple(t), fn(t))
            checks += 1

    for a, b, c in product(range(min(4, max_size) + 1), repeat=3):
        if not (a >= b >= c) or a == 0:
            continue
        lam = lct_simple(a, b, c).lam
        for i in range(20):
            t = lam * i / 10
            _expect("nvol / 4 = psi", {'a': a, 'b': b, 'c': c, 't': t}, True, corollary_b_check(a, b, c, t))
            checks += 1

    convergence_primes = [p for p in primes if 31 <= p <= 307]
    for a, b, c, u, v in CONVERGENCE_SPECS:
        for row in convergence_rows(a, b, c, u, v, convergence_primes, 10):
            bound_p = Fraction(CONVERGENCE_CONSTANT, row.p)
            if row.abs_diff > bound_p:
                raise VerificationFailure("convergence", {'a': a, 'b': b, 'c': c, 'u': u, 'v': v,
                                                          'p': row.p, 't': row.t_grid},
                                          f"<= {bound_p}", row.abs_diff)
            checks += 1

    witness = non_stabilization_witness(1, 1, 1, 101)
    if witness is None:
        raise VerificationFailure("non-stabilization witness", {'a': 1, 'b': 1, 'c': 1}, "a witness", None)
    logger.info("non-stabilization witness p=%d r=%d", witness[0], witness[1])
    checks += 1
    for p in (7, 11):
        for a, b, c in _nonzero_triples(min(2, bound)):
            checks += len(fpt_sanity(a, b, c, p))
    return checks


SUITE_RUNNERS: Dict[str, Callable[[int, Sequence[int]], int]] = {
    'basis': verify_basis,
    'length': verify_length,
    'fsig': verify_fsig,
}


def run_verify(suite: str, max_size: int, primes: Sequence[int] = DEFAULT_VERIFY_PRIMES) -> VerifyReport:
    """Run one suite or all of them; raises VerificationFailure on the first mismatch."""
    if max_size < 1:
        raise DomainError(f"max size must be >= 1, got {max_size}")
    names = SUITES if suite == "all" else (suite,)
    if any(name not in SUITE_RUNNERS for name in names):
        raise DomainError(f"unknown suite {suite!r}")
    report = VerifyReport()
    for name in names:
        start = time.time()
        checks = SUITE_RUNNERS[name](max_size, tuple(primes))
        elapsed = time.time() - start
        logger.info("suite %s: %d checks in %.2fs", name, checks, elapsed)
        report.results.append(SuiteResult(name, checks, elapsed))
    return report
