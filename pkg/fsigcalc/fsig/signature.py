# fsigcalc/fsig/signature.py
"""F-signature of x^a y^b (x^u + y^v)^c: fixed-p values and their limits as p grows."""
import logging
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime, primerange

from fsigcalc.algorithms.hypotheses import check, require
from fsigcalc.arith.field import PrimeField
from fsigcalc.exceptions import DomainError, VerificationFailure
from fsigcalc.fsig.piecewise import PiecewiseFn
from fsigcalc.fsig.thresholds import lct_general, lct_simple, reciprocal
from fsigcalc.oracle.rank import fsig_oracle, length_rank
from fsigcalc.poly.polynomial import power_xy

logger = logging.getLogger(__name__)


def _as_t(t) -> Fraction:
    t = Fraction(t)
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    return t


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise DomainError(f"{p!r} is not prime")


def fsig_monomial(a: int, b: int, t) -> Fraction:
    """(1 - at)(1 - bt) below min(1/a, 1/b), else 0."""
    if a < 0 or b < 0:
        raise DomainError(f"a, b must be >= 0, got {(a, b)}")
    t = _as_t(t)
    if t >= min(reciprocal(a), reciprocal(b)):
        return Fraction(0)
    return (1 - a * t) * (1 - b * t)


# ---- u = v = 1 ------------------------------------------------------------

def _sorted_desc(a: int, b: int, c: int) -> Tuple[int, int, int]:
    a, b, c = sorted((a, b, c), reverse=True)
    return a, b, c


def _fsig_case(a: int, b: int, c: int) -> str:
    return "dominant" if a >= b + c else "balanced"


def fsig_at_p(a: int, b: int, c: int, p: int, r: int) -> Fraction:
    """psi_p(r/p) for x^a y^b (x+y)^c, below the threshold."""
    _check_prime(p)
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    a, b, c = _sorted_desc(a, b, c)
    lam = lct_simple(a, b, c).lam
    t = Fraction(r, p)
    require(check("r/p < min(1/a, 2/(a+b+c))", t < lam, r=r, p=p, a=a, b=b, c=c))
    s = a + b + c
    if _fsig_case(a, b, c) == "dominant":
        return 1 - s * t + Fraction(a * (b + c) * r * r, p * p)
    return 1 - s * t + Fraction((s * s * r * r) // 4, p * p)


def limit_fsig_simple(a: int, b: int, c: int) -> PiecewiseFn:
    """Limit F-signature of x^a y^b (x+y)^c, a >= b >= c."""
    info = lct_simple(a, b, c)
    s = a + b + c
    if a >= b + c:
        piece = (1, -s, a * (b + c))
    else:
        piece = (1, -s, Fraction(s * s, 4))
    return PiecewiseFn.build([0, info.lam], [piece])


# ---- general u, v ---------------------------------------------------------

def _case_inequalities(a: int, b: int, c: int, u: int, v: int) -> List[Tuple[int, int]]:
    """Cases 1-3 as alpha * t >= beta."""
    return [
        (a * v - b * u - c * u * v, v - u),
        (b * u - a * v - c * u * v, u - v),
        (c * u * v - a * v - b * u, 2 * u * v - u - v),
    ]


def _general_case_at(t: Fraction, a: int, b: int, c: int, u: int, v: int) -> int:
    for idx, (alpha, beta) in enumerate(_case_inequalities(a, b, c, u, v), start=1):
        if alpha * t >= beta:
            return idx
    return 4


def _general_piece(case: int, a: int, b: int, c: int, u: int, v: int) -> Tuple[Fraction, ...]:
    if case == 1:
        q = b + c * v
        return (Fraction(1), Fraction(-(a + q)), Fraction(a * q))
    if case == 2:
        q = a + c * u
        return (Fraction(1), Fraction(-(b + q)), Fraction(b * q))
    if case == 3:
        A, B = u + v - u * v, a * v + b * u
        return (Fraction(A), Fraction(-(B + c * A)), Fraction(c * B))
    S, W = u + v, a * v + b * u + c * u * v
    den = 4 * u * v
    return (Fraction(S * S, den), Fraction(-2 * S * W, den), Fraction(W * W, den))


def limit_fsig_general(a: int, b: int, c: int, u: int = 1, v: int = 1) -> PiecewiseFn:
    """Limit F-signature of x^a y^b (x^u + y^v)^c."""
    lam = lct_general(a, b, c, u, v).lam
    if c == 0:
        return PiecewiseFn.build([0, lam], [(1, -(a + b), a * b)])
    points = {Fraction(0), lam}
    for alpha, beta in _case_inequalities(a, b, c, u, v):
        if alpha:
            root = Fraction(beta, alpha)
            if 0 < root < lam:
                points.add(root)
    breakpoints = sorted(points)
    pieces = []
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        case = _general_case_at((lo + hi) / 2, a, b, c, u, v)
        pieces.append(_general_piece(case, a, b, c, u, v))
    return PiecewiseFn.build(breakpoints, pieces)


def limit_fsig_rational_exponents(r1, r2, r3) -> Fraction:
    """Limit F-signature of x^r1 y^r2 (x+y)^r3, r1 >= r2 >= r3 >= 0."""
    r1, r2, r3 = Fraction(r1), Fraction(r2), Fraction(r3)
    if r3 < 0 or not (r1 >= r2 >= r3):
        raise DomainError(f"need r1 >= r2 >= r3 >= 0, got {(r1, r2, r3)}")
    total = r1 + r2 + r3
    if r1 >= 1 or total >= 2:
        return Fraction(0)
    if r1 >= r2 + r3:
        return (1 - r1) * (1 - r2 - r3)
    return (1 - total / 2) ** 2


def cover_exponents(a: int, b: int, c: int, u: int, v: int, t) -> Tuple[Fraction, Fraction, Fraction]:
    """Exponents of the pulled-back pair under x = X^u, y = Y^v, sorted descending."""
    t = _as_t(t)
    exps = sorted([(a * t + u - 1) / u, (b * t + v - 1) / v, c * t], reverse=True)
    return exps[0], exps[1], exps[2]


def limit_via_cover(a: int, b: int, c: int, u: int, v: int, t) -> Fraction:
    return u * v * limit_fsig_rational_exponents(*cover_exponents(a, b, c, u, v, t))


def limit_hk_multiplicity(fn: PiecewiseFn) -> Fraction:
    """-psi'(0+)"""
    return -fn.right_derivative(0)


# ---- fixed p through the oracle -------------------------------------------

def empirical_fsig(a: int, b: int, c: int, u: int, v: int, p: int, r: int, e: int = 1) -> Fraction:
    """psi_p(r / p^e) for x^a y^b (x^u + y^v)^c from the weighted rank oracle."""
    _check_prime(p)
    g = power_xy(a, b, c, u, v, 1, PrimeField(p))
    return fsig_oracle(g, p, r, e, weights=(v, u))


def non_stabilization_witness(a: int, b: int, c: int, max_p: int = 101) -> Optional[Tuple[int, int, Fraction, Fraction]]:
    """Smallest (p, odd r) where psi_p(r/p) differs from the limit at r/p."""
    a, b, c = _sorted_desc(a, b, c)
    limit = limit_fsig_simple(a, b, c)
    for p in map(int, primerange(2, max_p + 1)):
        for r in range(1, p, 2):
            t = Fraction(r, p)
            if t >= limit.lam:
                break
            value = fsig_at_p(a, b, c, p, r)
            if value != limit(t):
                return p, r, value, limit(t)
    return None


def fpt_sanity(a: int, b: int, c: int, p: int) -> List[int]:
    """Check psi_p(r/p) = 0 for every r <= p with r/p >= lambda; returns the r checked."""
    _check_prime(p)
    lam = lct_simple(*_sorted_desc(a, b, c)).lam
    f = power_xy(a, b, c, 1, 1, 1, PrimeField(p))
    checked = []
    for r in range(p + 1):
        if Fraction(r, p) < lam:
            continue
        length = length_rank(p, p, f, r, weights=(1, 1))
        if length != p * p:
            raise VerificationFailure("fpt <= lct", {'a': a, 'b': b, 'c': c, 'p': p, 'r': r}, p * p, length)
        checked.append(r)
    return checked


# ---- convergence table ----------------------------------------------------

@dataclass(frozen=True)
class ConvergenceRow:
    p: int
    t_grid: Fraction
    t: Fraction
    psi_p: Fraction
    psi_limit: Fraction

    @property
    def abs_diff(self) -> Fraction:
        return abs(self.psi_p - self.psi_limit)

    def abs_diff_decimal(self) -> str:
        with localcontext() as ctx:
            ctx.prec = 28
            value = Decimal(self.abs_diff.numerator) / Decimal(self.abs_diff.denominator)
        return format(value, ".12f")

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            't_grid': str(self.t_grid),
            't': str(self.t),
            'psi_p': str(self.psi_p),
            'psi_limit': str(self.psi_limit),
            'abs_diff': self.abs_diff_decimal(),
        }


def t_grid(lam: Fraction, count: int) -> List[Fraction]:
    """count points strictly inside (0, lambda)."""
    if count < 1:
        raise DomainError(f"grid count must be >= 1, got {count}")
    return [lam * i / (count + 1) for i in range(1, count + 1)]


def psi_at_p(a: int, b: int, c: int, u: int, v: int, p: int, r: int) -> Fraction:
    if u == 1 and v == 1:
        return fsig_at_p(a, b, c, p, r)
    return empirical_fsig(a, b, c, u, v, p, r)


def convergence_rows(a: int, b: int, c: int, u: int, v: int, primes: Sequence[int], count: int) -> List[ConvergenceRow]:
    limit = limit_fsig_general(a, b, c, u, v)
    grid = t_grid(limit.lam, count)
    rows = []
    for p in sorted(primes):
        _check_prime(p)
        logger.info("convergence rows for p=%d", p)
        for t in grid:
            r = floor(t * p)
            rows.append(ConvergenceRow(p=p, t_grid=t, t=Fraction(r, p),
                                       psi_p=psi_at_p(a, b, c, u, v, p, r), psi_limit=limit(t)))
    return rows
