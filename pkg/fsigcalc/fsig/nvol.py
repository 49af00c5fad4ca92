# fsigcalc/fsig/nvol.py
from fractions import Fraction

from fsigcalc.fsig.signature import limit_fsig_simple
from fsigcalc.fsig.thresholds import lct_simple
from fsigcalc.exceptions import DomainError


def nvol_simple(a: int, b: int, c: int, t) -> Fraction:
    """Normalized volume of (A^2, t * div(x^a y^b (x+y)^c)) at the origin, a >= b >= c."""
    lam = lct_simple(a, b, c).lam
    t = Fraction(t)
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    if t >= lam:
        return Fraction(0)
    if a >= b + c:
        return 4 * (1 - (b + c) * t) * (1 - a * t)
    return (2 - (a + b + c) * t) ** 2


def corollary_b_check(a: int, b: int, c: int, t) -> bool:
    """nvol / 4 equals the limit F-signature at t."""
    return nvol_simple(a, b, c, t) / 4 == limit_fsig_simple(a, b, c)(t)
