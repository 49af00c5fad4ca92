# fsigcalc/fsig/thresholds.py
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Union

from fsigcalc.exceptions import DomainError


class Infinity:
    """+infinity, ordered above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, Infinity)

    def __gt__(self, other):
        return not isinstance(other, Infinity)

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("inf")

    def __repr__(self):
        return "inf"

    __str__ = __repr__


INF = Infinity()

Threshold = Union[Fraction, Infinity]


def reciprocal(n: int) -> Threshold:
    """1/n with 1/0 = +infinity."""
    if n < 0:
        raise DomainError(f"reciprocal of a negative exponent: {n}")
    return INF if n == 0 else Fraction(1, n)


def render(value: Threshold) -> str:
    return str(value)


@dataclass(frozen=True)
class ThresholdInfo:
    lam: Threshold
    lambda_0: Threshold
    components: Dict[str, Threshold] = field(default_factory=dict)

    def __post_init__(self):
        if self.lam != min([self.lambda_0, *self.components.values()]):
            raise DomainError(f"lambda {self.lam} is not the minimum of its components")

    def to_dict(self):
        return {
            'lambda': render(self.lam),
            'lambda_0': render(self.lambda_0),
            'components': {k: render(v) for k, v in self.components.items()},
        }


def _check_sorted(a: int, b: int, c: int) -> None:
    if min(a, b, c) < 0:
        raise DomainError(f"exponents must be >= 0, got {(a, b, c)}")
    if not (a >= b >= c):
        raise DomainError(f"need a >= b >= c, got {(a, b, c)}")
    if a == 0:
        raise DomainError("a, b, c must not all be zero")


def lct_simple(a: int, b: int, c: int) -> ThresholdInfo:
    """lct of x^a y^b (x+y)^c, a >= b >= c: min(1/a, 2/(a+b+c))."""
    _check_sorted(a, b, c)
    lambda_0 = Fraction(2, a + b + c)
    components = {'1/a': reciprocal(a), '1/b': reciprocal(b), '1/c': reciprocal(c)}
    return ThresholdInfo(lam=min([lambda_0, *components.values()]), lambda_0=lambda_0, components=components)


def lct_general(a: int, b: int, c: int, u: int = 1, v: int = 1) -> ThresholdInfo:
    """lct of x^a y^b (x^u + y^v)^c."""
    if u < 1 or v < 1:
        raise DomainError(f"u and v must be >= 1, got u={u}, v={v}")
    if min(a, b, c) < 0:
        raise DomainError(f"exponents must be >= 0, got {(a, b, c)}")
    if a == b == c == 0:
        raise DomainError("a, b, c must not all be zero")
    lambda_0 = (Fraction(1, u) + Fraction(1, v)) / (Fraction(a, u) + Fraction(b, v) + c)
    components = {'1/a': reciprocal(a), '1/b': reciprocal(b), '1/c': reciprocal(c)}
    lam = min([lambda_0, *components.values()])
    return ThresholdInfo(lam=lam, lambda_0=lambda_0, components=components)
