# fsigcalc/oracle/buchberger.py
import heapq
import logging
from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, List, Sequence, Tuple, Union

from fsigcalc.algorithms.closed_basis import GroebnerBasis, IdealSpec
from fsigcalc.algorithms.staircase import colength
from fsigcalc.exceptions import DomainError, FieldMismatch, ZeroPolynomial
from fsigcalc.oracle.rank import truncated_power
from fsigcalc.poly.polynomial import ORDER, Monomial, Poly, minimalize, normal_form, s_polynomial, x_power, y_power

logger = logging.getLogger(__name__)


def _coprime(m1: Monomial, m2: Monomial) -> bool:
    return min(m1.i, m2.i) == 0 and min(m1.j, m2.j) == 0


def _check_generators(gens: Sequence[Poly]) -> None:
    if not gens:
        raise DomainError("need at least one generator")
    field0 = gens[0].field
    for g in gens:
        if g.field != field0:
            raise FieldMismatch(f"{field0!r} vs {g.field!r}")
        if not g:
            raise ZeroPolynomial("generators must be nonzero")


def _minimal(basis: List[Poly]) -> List[Poly]:
    """Drop generators whose leading monomial is divisible by another's."""
    ordered = sorted(basis, key=lambda g: ORDER.key(g.leading_monomial))
    kept: List[Poly] = []
    for g in ordered:
        lm = g.leading_monomial
        if not any(k.leading_monomial.divides(lm) for k in kept):
            kept.append(g)
    return kept


def buchberger(gens: Sequence[Poly]) -> GroebnerBasis:
    """Groebner basis with normal pair selection and the coprime criterion."""
    _check_generators(gens)
    basis = [g.monic() for g in gens]
    tie = count()
    pairs: List[Tuple[Tuple[int, int], int, int, int]] = []

    def push(i: int, j: int) -> None:
        lcm = basis[i].leading_monomial.lcm(basis[j].leading_monomial)
        heapq.heappush(pairs, (ORDER.key(lcm), next(tie), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    reductions = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if _coprime(basis[i].leading_monomial, basis[j].leading_monomial):
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j]), basis)
        reductions += 1
        if remainder:
            basis.append(remainder.monic())
            new = len(basis) - 1
            for k in range(new):
                push(k, new)
    minimal = _minimal(basis)
    logger.debug("buchberger: %d reductions, %d -> %d generators", reductions, len(basis), len(minimal))
    return GroebnerBasis(
        generators=tuple(minimal),
        lt_ideal=minimalize(g.leading_monomial for g in minimal),
        case="buchberger",
    )


@dataclass(frozen=True)
class GroebnerCertificate:
    is_groebner: bool
    failing_pairs: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)
    remainders: Tuple[Poly, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.is_groebner


def is_groebner(candidates: Sequence[Poly]) -> GroebnerCertificate:
    """Buchberger's criterion over every pair, no shortcuts."""
    _check_generators(candidates)
    failing = []
    remainders = []
    for j in range(len(candidates)):
        for i in range(j):
            r = normal_form(s_polynomial(candidates[i], candidates[j]), candidates)
            if r:
                failing.append((i, j))
                remainders.append(r)
    return GroebnerCertificate(not failing, tuple(failing), tuple(remainders))


def ideal_generators(spec: IdealSpec) -> List[Poly]:
    """x^M, y^N and f^K reduced modulo (x^M, y^N)."""
    field = spec.field
    gens = [x_power(field, spec.M), y_power(field, spec.N)]
    power = truncated_power(spec.base_polynomial(), spec.K, spec.M, spec.N)
    if power:
        gens.append(power)
    return gens


def standard_monomial_count(basis: Union[GroebnerBasis, Iterable[Poly]]) -> int:
    if isinstance(basis, GroebnerBasis):
        return colength(basis.lt_ideal)
    return colength(g.leading_monomial for g in basis)
