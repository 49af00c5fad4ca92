# fsigcalc/arith/binomial.py
import logging
import threading
from fractions import Fraction
from typing import List, Tuple

from fsigcalc.arith.linalg import bareiss_determinant
from fsigcalc.exceptions import DomainError

logger = logging.getLogger(__name__)

# Pascal triangle, grown on demand. Rows are immutable tuples.
_ROWS: List[Tuple[int, ...]] = [(1,)]
_LOCK = threading.Lock()


def _row(n: int) -> Tuple[int, ...]:
    if n < len(_ROWS):
        return _ROWS[n]
    with _LOCK:
        while len(_ROWS) <= n:
            prev = _ROWS[-1]
            _ROWS.append((1,) + tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1)) + (1,))
    return _ROWS[n]


def binom(n: int, k: int) -> int:
    """Exact C(n, k); zero when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binom requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return _row(n)[k]


def binom_matrix(k: int, a: int, v: int) -> List[List[int]]:
    """D(k, a, v): the (a+v+1)-square matrix with entries C(k, a - i + j)."""
    _check_det_domain(k, a, v)
    size = a + v + 1
    return [[binom(k, a - i + j) for j in range(size)] for i in range(size)]


def _check_det_domain(k: int, a: int, v: int) -> None:
    if not (0 <= a <= k):
        raise DomainError(f"need 0 <= a <= k, got a={a}, k={k}")
    if a + v < 0:
        raise DomainError(f"need a + v >= 0, got a={a}, v={v}")


def det_binomial_formula(k: int, a: int, v: int) -> Fraction:
    """det D(k, a, v) as the ratio of binomial products."""
    _check_det_domain(k, a, v)
    num = 1
    den = 1
    for i in range(a + v + 1):
        num *= binom(k + i, a + i)
        den *= binom(k + v - i, a + v - i)
    value = Fraction(num, den)
    if value.denominator != 1:
        raise ArithmeticError(f"binomial determinant formula is not integral at {(k, a, v)}")
    return value


def det_binomial_naive(k: int, a: int, v: int) -> Fraction:
    """det D(k, a, v) by fraction-free elimination."""
    return Fraction(bareiss_determinant(binom_matrix(k, a, v)))


def det_binomial_nonzero_mod(k: int, a: int, v: int, p: int) -> bool:
    return det_binomial_formula(k, a, v).numerator % p != 0
