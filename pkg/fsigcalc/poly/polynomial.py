# fsigcalc/poly/polynomial.py

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple, Union

from fsigcalc.arith.binomial import binom
from fsigcalc.arith.field import QQ, CoeffField, RationalField
from fsigcalc.config import MAX_EXPONENT
from fsigcalc.exceptions import DomainError, FieldMismatch, ZeroPolynomial


class Monomial(NamedTuple):
    """x^i y^j"""
    i: int
    j: int

    def divides(self, other: "Monomial") -> bool:
        return self.i <= other.i and self.j <= other.j

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.i + other.i, self.j + other.j)

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other, assuming other divides self."""
        return Monomial(self.i - other.i, self.j - other.j)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.i, other.i), max(self.j, other.j))

    def degree(self) -> int:
        return self.i + self.j

    def render(self) -> str:
        parts = []
        if self.i:
            parts.append("x" if self.i == 1 else f"x^{self.i}")
        if self.j:
            parts.append("y" if self.j == 1 else f"y^{self.j}")
        return "*".join(parts) if parts else "1"


class MonomialOrder:
    """Graded order with ties broken by the larger x-exponent (x > y)."""

    name = "grlex(x>y)"

    @staticmethod
    def key(mono: Monomial) -> Tuple[int, int]:
        return (mono.i + mono.j, mono.i)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __repr__(self):
        return f"MonomialOrder({self.name})"


ORDER = MonomialOrder()
_key = MonomialOrder.key

Scalar = Union[int, Fraction]


class Poly:
    """Sparse polynomial in K[x, y]: a map from monomials to nonzero field elements."""

    __slots__ = ("field", "_terms")

    def __init__(self, field: CoeffField, terms: Optional[Mapping] = None):
        self.field = field
        clean: Dict[Monomial, object] = {}
        for mono, coeff in (terms or {}).items():
            mono = Monomial(*mono)
            _check_exponents(mono)
            value = field.convert(coeff)
            if not field.is_zero(value):
                clean[mono] = value
        self._terms = clean

    @classmethod
    def _from_clean(cls, field: CoeffField, terms: Dict[Monomial, object]) -> "Poly":
        poly = cls.__new__(cls)
        poly.field = field
        poly._terms = terms
        return poly

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, field: CoeffField = QQ) -> "Poly":
        return cls._from_clean(field, {})

    @classmethod
    def one(cls, field: CoeffField = QQ) -> "Poly":
        return cls.monomial(field, 0, 0)

    @classmethod
    def monomial(cls, field: CoeffField, i: int, j: int, coeff: Scalar = 1) -> "Poly":
        return cls(field, {Monomial(i, j): coeff})

    @classmethod
    def x(cls, field: CoeffField = QQ) -> "Poly":
        return cls.monomial(field, 1, 0)

    @classmethod
    def y(cls, field: CoeffField = QQ) -> "Poly":
        return cls.monomial(field, 0, 1)

    # ---- inspection ---------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, object]]:
        """Terms in descending monomial order."""
        return sorted(self._terms.items(), key=lambda kv: _key(kv[0]), reverse=True)

    def monomials(self) -> Set[Monomial]:
        return set(self._terms)

    def coefficient(self, i: int, j: int):
        return self._terms.get(Monomial(i, j), self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> Tuple[Monomial, object]:
        if not self._terms:
            raise ZeroPolynomial("leading term of the zero polynomial")
        mono = max(self._terms, key=_key)
        return mono, self._terms[mono]

    @property
    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    @property
    def leading_coeff(self):
        return self.leading_term()[1]

    def weighted_degrees(self, weights: Tuple[int, int] = (1, 1)) -> Set[int]:
        wx, wy = weights
        return {wx * m.i + wy * m.j for m in self._terms}

    def is_homogeneous(self, weights: Tuple[int, int] = (1, 1)) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    def weighted_degree(self, weights: Tuple[int, int] = (1, 1)) -> int:
        degrees = self.weighted_degrees(weights)
        if len(degrees) != 1:
            raise DomainError(f"polynomial is not homogeneous for weights {weights}")
        return next(iter(degrees))

    # ---- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly(self.field, {Monomial(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = f.add(out.get(mono, f.zero), coeff)
            if f.is_zero(value):
                out.pop(mono, None)
            else:
                out[mono] = value
        return Poly._from_clean(f, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Poly._from_clean(f, {m: f.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        out: Dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = Monomial(m1.i + m2.i, m1.j + m2.j)
                out[mono] = f.add(out.get(mono, f.zero), f.mul(c1, c2))
        for mono in [m for m, c in out.items() if f.is_zero(c)]:
            del out[mono]
        for mono in out:
            _check_exponents(mono)
        return Poly._from_clean(f, out)

    __rmul__ = __mul__

    def scalar_mul(self, scalar) -> "Poly":
        f = self.field
        value = f.convert(scalar) if isinstance(scalar, (int, Fraction)) else scalar
        if f.is_zero(value):
            return Poly.zero(f)
        return Poly._from_clean(f, {m: f.mul(c, value) for m, c in self._terms.items()})

    def mul_term(self, mono: Monomial, coeff) -> "Poly":
        """Multiply by coeff * mono (coeff already a field element)."""
        f = self.field
        if f.is_zero(coeff):
            return Poly.zero(f)
        out = {Monomial(m.i + mono.i, m.j + mono.j): f.mul(c, coeff) for m, c in self._terms.items()}
        return Poly._from_clean(f, out)

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = Poly.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scalar_mul(self.field.inv(self.leading_coeff))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, frozenset(self._terms.items())))

    # ---- truncation and substitution -----------------------------------
    def truncate_x(self, m: int) -> "Poly":
        """Drop every term of x-degree >= m."""
        if m < 0:
            raise DomainError(f"truncation bound must be >= 0, got {m}")
        return Poly._from_clean(self.field, {k: c for k, c in self._terms.items() if k.i < m})

    def truncate_y(self, n: int) -> "Poly":
        """Drop every term of y-degree >= n."""
        if n < 0:
            raise DomainError(f"truncation bound must be >= 0, got {n}")
        return Poly._from_clean(self.field, {k: c for k, c in self._terms.items() if k.j < n})

    def truncate(self, m: int, n: int) -> "Poly":
        """Image in K[x, y]/(x^m, y^n)."""
        return self.truncate_x(m).truncate_y(n)

    def substitute_phi(self) -> "Poly":
        """x -> x + y, y -> -y."""
        f = self.field
        out: Dict[Monomial, object] = {}
        for mono, coeff in self._terms.items():
            signed = coeff if mono.j % 2 == 0 else f.neg(coeff)
            for l in range(mono.i + 1):
                target = Monomial(l, mono.i - l + mono.j)
                value = f.mul(signed, f.convert(binom(mono.i, l)))
                out[target] = f.add(out.get(target, f.zero), value)
        return Poly._from_clean(f, {m: c for m, c in out.items() if not f.is_zero(c)})

    # ---- output -------------------------------------------------------
    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for idx, (mono, coeff) in enumerate(self.items()):
            negative = isinstance(self.field, RationalField) and coeff < 0
            magnitude = -coeff if negative else coeff
            text = self.field.render(magnitude)
            if mono == (0, 0):
                body = text
            elif text == "1":
                body = mono.render()
            else:
                body = f"{text}*{mono.render()}"
            if idx == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def to_dict(self) -> dict:
        return {
            "field": repr(self.field),
            "terms": [[m.i, m.j, self.field.render(c)] for m, c in self.items()],
        }

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.field!r}, {self.render()!r})"


def _check_exponents(mono: Monomial) -> None:
    if mono.i < 0 or mono.j < 0:
        raise DomainError(f"negative exponent in {tuple(mono)}")
    if mono.i > MAX_EXPONENT or mono.j > MAX_EXPONENT:
        raise DomainError(f"exponent above 2^20 in {tuple(mono)}")


def x_power(field: CoeffField, n: int) -> Poly:
    return Poly.monomial(field, n, 0)


def y_power(field: CoeffField, n: int) -> Poly:
    return Poly.monomial(field, 0, n)


def divide(f: Poly, basis: Sequence[Poly]) -> Tuple[List[Poly], Poly]:
    """Multivariate division: f = sum(q_i * g_i) + r, no term of r divisible by any LM(g_i)."""
    field = f.field
    for g in basis:
        if g.field != field:
            raise FieldMismatch(f"{field!r} vs {g.field!r}")
        if not g:
            raise ZeroPolynomial("division by the zero polynomial")
    zero = field.zero
    leads = [g.leading_term() for g in basis]
    quotients: List[Dict[Monomial, object]] = [{} for _ in basis]
    remainder: Dict[Monomial, object] = {}
    work = dict(f._terms)
    while work:
        mono = max(work, key=_key)
        coeff = work[mono]
        for idx, (lm, lc) in enumerate(leads):
            if lm.divides(mono):
                q_mono = mono.quotient(lm)
                q_coeff = field.div(coeff, lc)
                quotients[idx][q_mono] = field.add(quotients[idx].get(q_mono, zero), q_coeff)
                for gm, gc in basis[idx]._terms.items():
                    target = Monomial(gm.i + q_mono.i, gm.j + q_mono.j)
                    value = field.sub(work.get(target, zero), field.mul(q_coeff, gc))
                    if field.is_zero(value):
                        work.pop(target, None)
                    else:
                        work[target] = value
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    quotient_polys = [
        Poly._from_clean(field, {m: c for m, c in q.items() if not field.is_zero(c)})
        for q in quotients
    ]
    return quotient_polys, Poly._from_clean(field, remainder)


def normal_form(f: Poly, basis: Sequence[Poly]) -> Poly:
    return divide(f, basis)[1]


def s_polynomial(f: Poly, g: Poly) -> Poly:
    field = f.field
    (mf, cf), (mg, cg) = f.leading_term(), g.leading_term()
    lcm = mf.lcm(mg)
    left = f.mul_term(lcm.quotient(mf), field.inv(cf))
    right = g.mul_term(lcm.quotient(mg), field.inv(cg))
    return left - right


def power_xy(a: int, b: int, c: int, u: int, v: int, K: int, field: CoeffField = QQ) -> Poly:
    """(x^a y^b (x^u + y^v)^c)^K expanded binomially."""
    for name, value in (("a", a), ("b", b), ("c", c), ("u", u), ("v", v), ("K", K)):
        if value < 0:
            raise DomainError(f"{name} must be >= 0, got {value}")
    n = c * K
    terms = {}
    for j in range(n + 1):
        mono = Monomial(a * K + u * j, b * K + v * (n - j))
        coeff = field.add(terms.get(mono, field.zero), field.convert(binom(n, j)))
        terms[mono] = coeff
    return Poly(field, terms)


def minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Minimal generators of a monomial ideal, sorted by increasing x-exponent."""
    unique = sorted(set(Monomial(*m) for m in monomials), key=lambda m: (m.i + m.j, m.i))
    kept: List[Monomial] = []
    for mono in unique:
        if not any(k.divides(mono) for k in kept):
            kept.append(mono)
    return tuple(sorted(kept))
