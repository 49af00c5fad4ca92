# fsigcalc/algorithms/closed_basis.py
"""Explicit Groebner bases of (x^M, y^N, (x^a y^b (x+y)^c)^K).

The building blocks are the f-family (truncations of (x+y)^k solved from a
two-step recursion) and its image g under x -> x+y, y -> -y.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from fsigcalc.algorithms.hypotheses import HypothesisCheck, char_p_bound, require
from fsigcalc.algorithms.staircase import colength
from fsigcalc.arith.binomial import binom
from fsigcalc.arith.field import QQ, CoeffField
from fsigcalc.exceptions import DomainError
from fsigcalc.poly.polynomial import Monomial, Poly, minimalize, power_xy, x_power, y_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealSpec:
    """Parameters of I = (x^M, y^N, (x^a y^b (x+y)^c)^K)."""
    M: int
    N: int
    K: int
    a: int = 0
    b: int = 0
    c: int = 1
    field: CoeffField = QQ

    def __post_init__(self):
        for name in ("M", "N"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be a positive integer, got {getattr(self, name)}")
        if self.K < 0:
            raise DomainError(f"K must be >= 0, got {self.K}")
        for name in ("a", "b", "c"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0, got {getattr(self, name)}")

    @classmethod
    def simple(cls, k: int, m: int, n: int, field: CoeffField = QQ) -> "IdealSpec":
        """(x^m, y^n, (x+y)^k)"""
        return cls(M=m, N=n, K=k, a=0, b=0, c=1, field=field)

    @property
    def is_simple(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 1

    def base_polynomial(self) -> Poly:
        """x^a y^b (x+y)^c"""
        return power_xy(self.a, self.b, self.c, 1, 1, 1, self.field)

    def generator(self) -> Poly:
        return power_xy(self.a, self.b, self.c, 1, 1, self.K, self.field)

    def to_dict(self):
        return {
            'M': self.M, 'N': self.N, 'K': self.K,
            'a': self.a, 'b': self.b, 'c': self.c,
            'field': repr(self.field),
        }


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[Poly, ...]
    lt_ideal: Tuple[Monomial, ...]
    case: str
    spec: Optional[IdealSpec] = None
    hypotheses: Tuple[HypothesisCheck, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if any(not g for g in self.generators):
            raise DomainError("Groebner basis generators must be nonzero")

    def colength(self) -> int:
        return colength(self.lt_ideal)

    def render(self) -> List[str]:
        return [g.render() for g in self.generators]

    def to_dict(self):
        return {
            'case': self.case,
            'spec': self.spec.to_dict() if self.spec else None,
            'generators': self.render(),
            'lt_ideal': [m.render() for m in self.lt_ideal],
            'hypotheses': [h.to_dict() for h in self.hypotheses],
        }


# ---- hypotheses ---------------------------------------------------------

def check_small_case(k: int, m: int, field: CoeffField) -> HypothesisCheck:
    return char_p_bound(field, "m + k <= p", m + k, m=m, k=k)


def check_general_case(spec: IdealSpec) -> HypothesisCheck:
    bound = spec.M + (spec.c - spec.a) * spec.K
    return char_p_bound(spec.field, "M + (c - a)K <= p", bound,
                        M=spec.M, K=spec.K, a=spec.a, c=spec.c)


def _check_f_range(t: int, k: int, m: int, lowest_t: int) -> None:
    if not (lowest_t <= t < m <= k):
        raise DomainError(f"need {lowest_t} <= t < m <= k, got t={t}, m={m}, k={k}")


# ---- the f family ---------------------------------------------------------

def _falling(start: int, lo: int, hi: int) -> int:
    """prod_{l=lo}^{hi} (start - l)"""
    out = 1
    for l in range(lo, hi + 1):
        out *= start - l
    return out


def f_odd(t: int, k: int, m: int, field: CoeffField = QQ) -> Poly:
    """f_{2t+1} in closed form."""
    _check_f_range(t, k, m, 0)
    require(check_small_case(k, m, field))
    den = _falling(m, 1, t)
    terms = {}
    for j in range(m - t):
        coeff = Fraction(_falling(m - j, 1, t), den) * binom(k + t, j)
        terms[Monomial(j, k - j + t)] = coeff
    return Poly(field, terms)


def f_even(t: int, k: int, m: int, field: CoeffField = QQ) -> Poly:
    """f_{2t} in closed form, t >= 1."""
    _check_f_range(t, k, m, 1)
    require(check_small_case(k, m, field))
    den = _falling(m, 1, t - 1)
    terms = {}
    for j in range(m - t):
        coeff = Fraction(_falling(m - j, 2, t), den) * binom(k + t - 1, j)
        terms[Monomial(j + 1, k - j + t - 1)] = coeff
    return Poly(field, terms)


def f_closed(s: int, k: int, m: int, field: CoeffField = QQ) -> Poly:
    if s % 2:
        return f_odd((s - 1) // 2, k, m, field)
    return f_even(s // 2, k, m, field)


def f_recursive(s: int, k: int, m: int, field: CoeffField = QQ) -> Poly:
    """f_s from the two-step recursion started at f_1 = T_m^x (x+y)^k."""
    if not (1 <= s < 2 * m) or m > k:
        raise DomainError(f"need 1 <= s < 2m and m <= k, got s={s}, m={m}, k={k}")
    require(check_small_case(k, m, field))
    x, y = Poly.x(field), Poly.y(field)
    f_prev_odd = power_xy(0, 0, 1, 1, 1, k, field).truncate_x(m)
    if s == 1:
        return f_prev_odd
    f_prev_even = x * f_prev_odd - Poly.monomial(field, m, k - m + 1, binom(k, m - 1))
    if s == 2:
        return f_prev_even
    div = field.div
    conv = field.convert
    for t in range(1, m):
        coeff = div(conv(k + 2 * t - m), conv(m - t))
        f_odd_t = y * f_prev_odd - f_prev_even.scalar_mul(coeff)
        if s == 2 * t + 1:
            return f_odd_t
        lead = div(conv(k + 2 * t - m + 1), conv(k + t - m + 1))
        tail = div(conv(t * (k + t)), field.mul(conv(k + t - m + 1), conv(m - t)))
        f_even_t = (x * f_odd_t).scalar_mul(lead) - (y * f_prev_even).scalar_mul(tail)
        if s == 2 * t + 2:
            return f_even_t
        f_prev_odd, f_prev_even = f_odd_t, f_even_t
    raise DomainError(f"index s={s} out of range for m={m}")


def leading_term_formula(s: int, k: int, m: int) -> Tuple[Monomial, Fraction]:
    """Predicted leading monomial and coefficient (over Q) of f_s."""
    if not (1 <= s < 2 * m) or m > k:
        raise DomainError(f"need 1 <= s < 2m and m <= k, got s={s}, m={m}, k={k}")
    if s % 2:
        t = (s - 1) // 2
        coeff = Fraction(_falling(t + 1, 1, t), _falling(m, 1, t)) * binom(k + t, m - 1 - t)
        return Monomial(m - 1 - t, k - m + 2 * t + 1), coeff
    t = s // 2
    coeff = Fraction(_falling(t + 1, 2, t), _falling(m, 1, t - 1)) * binom(k + t - 1, m - 1 - t)
    return Monomial(m - t, k - m + 2 * t), coeff


# ---- the g family ---------------------------------------------------------

def _check_g_range(t: int, k: int, m: int) -> None:
    if not (0 <= t < k < m):
        raise DomainError(f"need 0 <= t < k < m, got t={t}, k={k}, m={m}")


def g_family(t: int, k: int, m: int, field: CoeffField = QQ) -> Poly:
    """phi(f_{2t+1}) with the roles of k and m exchanged."""
    _check_g_range(t, k, m)
    require(check_small_case(k, m, field))
    return f_odd(t, m, k, field).substitute_phi()


def g_family_explicit(t: int, k: int, m: int, field: CoeffField = QQ) -> Poly:
    """Same polynomial, from the double sum over j >= i."""
    _check_g_range(t, k, m)
    require(check_small_case(k, m, field))
    den = _falling(k, 1, t)
    terms = {}
    for i in range(k - t):
        total = Fraction(0)
        for j in range(i, k - t):
            sign = -1 if (m - j - t) % 2 else 1
            total += sign * Fraction(_falling(k - j, 1, t), den) * binom(m + t, j) * binom(j, i)
        terms[Monomial(i, m - i + t)] = total
    return Poly(field, terms)


# ---- the shifted families -------------------------------------------------

def _shift(spec: IdealSpec, poly: Poly) -> Poly:
    return poly.mul_term(Monomial(spec.a * spec.K, spec.b * spec.K), spec.field.one)


def groebner_case(spec: IdealSpec) -> int:
    aK, bK, cK = spec.a * spec.K, spec.b * spec.K, spec.c * spec.K
    if aK >= spec.M or bK >= spec.N:
        return 1
    if aK + cK >= spec.M:
        return 2
    return 3


def h_family(t: int, spec: IdealSpec) -> Poly:
    """H_t = x^(aK) y^(bK) f_{2t+1}(k=cK, m=M-aK)."""
    if groebner_case(spec) != 2:
        raise DomainError(f"H_t needs aK < M, bK < N and (a+c)K >= M, got {spec.to_dict()}")
    m = spec.M - spec.a * spec.K
    if not 0 <= t < m:
        raise DomainError(f"need 0 <= t < M - aK = {m}, got t={t}")
    require(check_general_case(spec))
    return _shift(spec, f_odd(t, spec.c * spec.K, m, spec.field))


def l_family(t: int, spec: IdealSpec) -> Poly:
    """L_t = x^(aK) y^(bK) g_t(k=cK, m=M-aK)."""
    if groebner_case(spec) != 3:
        raise DomainError(f"L_t needs (a+c)K < M and bK < N, got {spec.to_dict()}")
    k = spec.c * spec.K
    if not 0 <= t < k:
        raise DomainError(f"need 0 <= t < cK = {k}, got t={t}")
    require(check_general_case(spec))
    return _shift(spec, g_family(t, k, spec.M - spec.a * spec.K, spec.field))


def closed_groebner(spec: IdealSpec) -> GroebnerBasis:
    """Case-matched explicit basis and its initial ideal."""
    if spec.K == 0:
        # f^0 = 1 generates the unit ideal
        return GroebnerBasis(generators=(Poly.one(spec.field),), lt_ideal=(Monomial(0, 0),), case="unit", spec=spec)
    hyp = require(check_general_case(spec))
    M, N, K, a, b, c = spec.M, spec.N, spec.K, spec.a, spec.b, spec.c
    field = spec.field
    gens = [x_power(field, M), y_power(field, N)]
    leads = [Monomial(M, 0), Monomial(0, N)]
    case = groebner_case(spec)
    if case == 2:
        for t in range(M - a * K):
            gens.append(h_family(t, spec))
            leads.append(Monomial(M - t - 1, (a + b + c) * K - M + 2 * t + 1))
    elif case == 3:
        gens.append(spec.generator())
        leads.append(Monomial((a + c) * K, b * K))
        for t in range(c * K):
            gens.append(l_family(t, spec))
            leads.append(Monomial((a + c) * K - t - 1, M + (b - a - c) * K + 2 * t + 1))
    logger.debug("closed basis case %d for %s: %d generators", case, spec.to_dict(), len(gens))
    return GroebnerBasis(
        generators=tuple(gens),
        lt_ideal=minimalize(leads),
        case=f"case{case}",
        spec=spec,
        hypotheses=(hyp,),
    )


def simple_groebner(k: int, m: int, n: int, field: CoeffField = QQ) -> GroebnerBasis:
    """Basis of (x^m, y^n, (x+y)^k): the f-family when m <= k, the g-family when k < m."""
    spec = IdealSpec.simple(k, m, n, field)
    require(check_small_case(k, m, field))
    return closed_groebner(spec)


def truncated_basis(k: int, m: int, n: int, field: CoeffField = QQ) -> GroebnerBasis:
    """x^m, y^n and T_n^y f_{2t+1} for t < m with 2t < n + m - k - 1 (m <= k)."""
    if not (1 <= m <= k) or n < 1:
        raise DomainError(f"need 1 <= m <= k and n >= 1, got k={k}, m={m}, n={n}")
    hyp = require(check_small_case(k, m, field))
    gens = [x_power(field, m), y_power(field, n)]
    for t in range(m):
        if 2 * t >= n + m - k - 1:
            break
        gens.append(f_odd(t, k, m, field).truncate_y(n))
    leads = [g.leading_monomial for g in gens]
    return GroebnerBasis(
        generators=tuple(gens),
        lt_ideal=minimalize(leads),
        case="truncated",
        spec=IdealSpec.simple(k, m, n, field),
        hypotheses=(hyp,),
    )
