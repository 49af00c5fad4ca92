# fsigcalc/arith/field.py
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import isprime

from fsigcalc.config import PRIME_LIMIT
from fsigcalc.exceptions import DivisionByZero, DomainError

# Exact rationals: always lowest terms, positive denominator.
BigRational = Fraction

Scalar = Union[int, Fraction]


class CoeffField:
    """Coefficient field interface shared by Q and F_p."""

    characteristic: int = 0

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def convert(self, value: Scalar):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def render(self, a) -> str:
        return str(a)


class RationalField(CoeffField):
    """Q with arbitrary-precision Fractions."""

    characteristic = 0
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def convert(self, value: Scalar) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


@dataclass(frozen=True)
class PrimeField(CoeffField):
    """F_p for a prime p < 2^31; elements are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or self.p >= PRIME_LIMIT:
            raise DomainError(f"prime modulus must satisfy 2 <= p < 2^31, got {self.p!r}")
        if not isprime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, value: Scalar) -> int:
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"


def parse_field(text: str) -> CoeffField:
    """Parse 'q' / 'QQ' or 'p=<prime>' into a field."""
    cleaned = text.strip().lower()
    if cleaned in ("q", "qq"):
        return QQ
    if cleaned.startswith("p="):
        try:
            p = int(cleaned[2:])
        except ValueError:
            raise DomainError(f"invalid prime in field spec {text!r}")
        return PrimeField(p)
    raise DomainError(f"field must be 'q' or 'p=<prime>', got {text!r}")
