# fsigcalc/algorithms/lengths.py
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, List, Tuple

from sympy import isprime

from fsigcalc.algorithms.closed_basis import IdealSpec
from fsigcalc.algorithms.hypotheses import HypothesisCheck, char_p_bound, check, require
from fsigcalc.arith.binomial import binom
from fsigcalc.arith.field import QQ, CoeffField
from fsigcalc.exceptions import DomainError, HypothesisViolation, VerificationFailure
from fsigcalc.oracle.rank import length_rank

logger = logging.getLogger(__name__)


class LengthRoute(Enum):
    SIMPLE_FORMULA = "SimpleFormula"
    GENERAL_FORMULA = "GeneralFormula"
    WLP_FORMULA = "WlpFormula"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class LengthResult:
    value: int
    route: LengthRoute
    case_tag: str
    hypotheses: Tuple[HypothesisCheck, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.value < 0:
            raise DomainError(f"colength must be >= 0, got {self.value}")

    def to_dict(self):
        return {
            'value': self.value,
            'route': self.route.value,
            'case': self.case_tag,
            'hypotheses': [h.to_dict() for h in self.hypotheses],
        }


def _resolve(cases: List[str], formulas: Dict[str, Callable[[], int]], context: Dict) -> Tuple[str, int]:
    """Value of the first matching case; every other matching case must agree."""
    tag = cases[0]
    value = formulas[tag]()
    for other in cases[1:]:
        other_value = formulas[other]()
        if other_value != value:
            raise VerificationFailure(f"overlapping cases {tag}/{other}", context, value, other_value)
    return tag, value


# ---- staircase ------------------------------------------------------------

def _staircase_case(alpha: int, beta: int, eta: int) -> List[str]:
    cases = []
    if beta + eta <= alpha:
        cases.append("a")
    if alpha + beta <= eta:
        cases.append("b")
    return cases or ["c"]


def staircase_colength(alpha: int, beta: int, eta: int) -> int:
    """Colength of (x^beta, y^eta) + (x^(beta-1-t) y^(alpha-beta+1+2t) : 0 <= t < beta)."""
    if alpha < beta or beta < 0 or eta < 0:
        raise DomainError(f"need alpha >= beta >= 0 and eta >= 0, got {(alpha, beta, eta)}")
    formulas = {
        "a": lambda: beta * eta,
        "b": lambda: beta * alpha,
        "c": lambda: beta * eta - (beta + eta - alpha) ** 2 // 4,
    }
    _, value = _resolve(_staircase_case(alpha, beta, eta), formulas,
                        {'alpha': alpha, 'beta': beta, 'eta': eta})
    return value


# ---- (x^m, y^n, (x+y)^k) --------------------------------------------------

def _simple_case(k: int, m: int, n: int) -> List[str]:
    cases = []
    if n >= k + m:
        cases.append("a")
    if k >= m + n:
        cases.append("b")
    if m >= n + k:
        cases.append("c")
    return cases or ["d"]


def check_simple_length(k: int, m: int, n: int, field: CoeffField) -> HypothesisCheck:
    return char_p_bound(field, "min(m+k, m+n, n+k) <= p", min(m + k, m + n, n + k), k=k, m=m, n=n)


def length_simple(k: int, m: int, n: int, field: CoeffField = QQ) -> LengthResult:
    """Colength of (x^m, y^n, (x+y)^k)."""
    if min(k, m, n) < 0:
        raise DomainError(f"k, m, n must be >= 0, got {(k, m, n)}")
    hyp = require(check_simple_length(k, m, n, field))
    formulas = {
        "a": lambda: k * m,
        "b": lambda: m * n,
        "c": lambda: k * n,
        "d": lambda: k * n + k * m + n * m - (k + n + m) ** 2 // 4,
    }
    tag, value = _resolve(_simple_case(k, m, n), formulas, {'k': k, 'm': m, 'n': n})
    return LengthResult(value=value, route=LengthRoute.SIMPLE_FORMULA, case_tag=tag, hypotheses=(hyp,))


def length_shift(m: int, n: int, a: int, b: int, inner_length: int) -> int:
    """Colength of x^a y^b J' + (x^m, y^n) given the colength of J' in the shifted box."""
    if min(m, n, a, b, inner_length) < 0:
        raise DomainError(f"length_shift inputs must be >= 0, got {(m, n, a, b, inner_length)}")
    if a >= m or b >= n:
        return m * n
    return a * n + (m - a) * b + inner_length


# ---- (x^M, y^M, (x^a y^b (x+y)^c)^K) ---------------------------------------

def _general_case(M: int, K: int, a: int, b: int, c: int) -> List[str]:
    cases = []
    if a >= b + c:
        cases.append("a")
    if (a + b + c) * K >= 2 * M:
        cases.append("b")
    if b >= a + c:
        cases.append("c")
    return cases or ["d"]


def _general_checks(M: int, K: int, a: int, b: int, c: int, field: CoeffField) -> List[HypothesisCheck]:
    bound = min(M + (c - a) * K, M + (c - b) * K, 2 * M - (a + b) * K)
    return [
        check("aK <= M", a * K <= M, a=a, K=K, M=M),
        check("bK <= M", b * K <= M, b=b, K=K, M=M),
        char_p_bound(field, "min(M+(c-a)K, M+(c-b)K, 2M-(a+b)K) <= p", bound, M=M, K=K, a=a, b=b, c=c),
    ]


def _orderings(a: int, b: int, c: int, allow_permutation: bool) -> List[Tuple[int, int, int]]:
    if not allow_permutation:
        return [(a, b, c)]
    return [(a, b, c), (c, b, a), (a, c, b), (c, a, b), (b, a, c), (b, c, a)]


def length_general(spec: IdealSpec) -> LengthResult:
    """Colength of (x^M, y^M, (x^a y^b (x+y)^c)^K).

    At M = p the three lines x, y, x+y may be permuted freely, so the first
    ordering of (a, b, c) meeting the hypotheses is used.
    """
    if spec.N != spec.M:
        raise DomainError("closed general lengths need N = M; use the oracle route for N != M")
    M, K, field = spec.M, spec.K, spec.field
    allow = field.characteristic == M
    first_failure = None
    for a, b, c in _orderings(spec.a, spec.b, spec.c, allow):
        checks = _general_checks(M, K, a, b, c, field)
        failed = next((h for h in checks if not h.holds), None)
        if failed is None:
            break
        first_failure = first_failure or failed
    else:
        raise HypothesisViolation(first_failure.inequality, first_failure.values)
    if (a, b, c) != (spec.a, spec.b, spec.c):
        checks.append(check("permuted (a, b, c) at M = p", True, a=a, b=b, c=c))
    s = a + b + c
    formulas = {
        "a": lambda: s * K * M - a * (b + c) * K * K,
        "b": lambda: M * M,
        "c": lambda: s * K * M - b * (a + c) * K * K,
        "d": lambda: s * K * M - (s * s * K * K) // 4,
    }
    tag, value = _resolve(_general_case(M, K, a, b, c), formulas,
                          {'M': M, 'K': K, 'a': a, 'b': b, 'c': c})
    return LengthResult(value=value, route=LengthRoute.GENERAL_FORMULA, case_tag=tag,
                        hypotheses=tuple(checks))


# ---- weak Lefschetz route ---------------------------------------------------

def _sorted_dims(k: int, m: int, n: int) -> Tuple[int, int, int]:
    d0, d1, d2 = sorted((k, m, n), reverse=True)
    return d0, d1, d2


def _wlp_case(d0: int, t: int) -> str:
    return "a" if 2 * d0 <= t + 1 else "b"


def _c2(n: int) -> int:
    return binom(n, 2) if n >= 0 else 0


def graded_dimension(degree: int, dims: Tuple[int, ...]) -> int:
    """dim of K[x,y,z]/(x^d0, y^d1, z^d2) in the given degree, by inclusion-exclusion."""
    if degree < 0:
        return 0
    total = 0
    for size in range(len(dims) + 1):
        for subset in combinations(dims, size):
            total += (-1) ** size * _c2(degree - sum(subset) + 2)
    return total


def check_wlp(k: int, m: int, n: int, p: int) -> HypothesisCheck:
    return check("0 <= m, n <= p - k", 0 <= m <= p - k and 0 <= n <= p - k, k=k, m=m, n=n, p=p)


def length_wlp(k: int, m: int, n: int, p: int) -> LengthResult:
    """Colength through the middle-degree dimension of x^d0, y^d1, z^d2."""
    if min(k, m, n) < 0:
        raise DomainError(f"k, m, n must be >= 0, got {(k, m, n)}")
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    hyp = require(check_wlp(k, m, n, p))
    d0, d1, d2 = _sorted_dims(k, m, n)
    t = d0 + d1 + d2 - 3
    tag = _wlp_case(d0, t)
    if tag == "a":
        half = t // 2
        value = _c2(half + 2) - sum(_c2(half - d + 2) for d in (d0, d1, d2))
    else:
        value = d1 * d2
    return LengthResult(value=value, route=LengthRoute.WLP_FORMULA, case_tag=tag, hypotheses=(hyp,))


def length_wlp_socle(k: int, m: int, n: int) -> int:
    """Full inclusion-exclusion at degree floor(t/2), t the socle degree."""
    dims = _sorted_dims(k, m, n)
    t = sum(dims) - 3
    return graded_dimension(t // 2, dims)


def length_wlp_closed(k: int, m: int, n: int) -> int:
    d0, d1, d2 = _sorted_dims(k, m, n)
    if _wlp_case(d0, d0 + d1 + d2 - 3) == "a":
        return (4 * d1 * d2 - (d0 - d1 - d2) ** 2 + 1) // 4
    return d1 * d2


# ---- oracle route ---------------------------------------------------------

def length_oracle(spec: IdealSpec) -> LengthResult:
    value = length_rank(spec.M, spec.N, spec.base_polynomial(), spec.K, weights=(1, 1))
    logger.debug("rank oracle length %d for %s", value, spec.to_dict())
    return LengthResult(value=value, route=LengthRoute.ORACLE, case_tag="rank")
