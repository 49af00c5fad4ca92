# fsigcalc/oracle/rank.py
"""Colength of (x^M, y^N, f^K) as M*N minus the rank of multiplication by f^K.

For quasi-homogeneous f the multiplication map sends each weighted-degree
block of K[x,y]/(x^M, y^N) into a single block, so the rank is a sum of
small block ranks.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from fsigcalc.arith.field import PrimeField, RationalField
from fsigcalc.arith.linalg import bareiss_rank, integer_rows, rank_mod_p
from fsigcalc.config import QQ_RANK_CELL_LIMIT
from fsigcalc.exceptions import DomainError
from fsigcalc.poly.polynomial import Monomial, Poly

logger = logging.getLogger(__name__)

Weights = Tuple[int, int]


@dataclass
class GradedRankPlan:
    """Basis monomials of K[x,y]/(x^M, y^N) grouped by weighted degree"""
    weights: Weights
    M: int
    N: int
    blocks: Dict[int, List[Monomial]] = field(default_factory=dict)

    @classmethod
    def build(cls, M: int, N: int, weights: Weights) -> "GradedRankPlan":
        wx, wy = weights
        if wx < 1 or wy < 1:
            raise DomainError(f"weights must be positive, got {weights}")
        blocks: Dict[int, List[Monomial]] = {}
        for i in range(M):
            for j in range(N):
                blocks.setdefault(wx * i + wy * j, []).append(Monomial(i, j))
        return cls(weights=weights, M=M, N=N, blocks=dict(sorted(blocks.items())))

    def size(self) -> int:
        return sum(len(b) for b in self.blocks.values())

    def to_dict(self):
        return {
            'weights': list(self.weights),
            'M': self.M,
            'N': self.N,
            'blocks': {d: len(b) for d, b in self.blocks.items()},
        }


def discover_weights(f: Poly) -> Weights:
    """Positive coprime (w_x, w_y) making f homogeneous."""
    support = sorted(f.monomials())
    if len(support) <= 1:
        return (1, 1)
    first = support[0]
    for other in support[1:]:
        di, dj = other.i - first.i, other.j - first.j
        if di == 0 and dj == 0:
            continue
        if di * dj >= 0:
            raise DomainError(f"{f.render()} is not quasi-homogeneous for positive weights")
        g = gcd(abs(di), abs(dj))
        weights = (abs(dj) // g, abs(di) // g)
        break
    if not f.is_homogeneous(weights):
        raise DomainError(f"{f.render()} is not quasi-homogeneous for positive weights")
    return weights


def truncated_power(f: Poly, K: int, M: int, N: int) -> Poly:
    """f^K in K[x,y]/(x^M, y^N), truncating after every product."""
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    result = Poly.one(f.field).truncate(M, N)
    base = f.truncate(M, N)
    while K:
        if K & 1:
            result = (result * base).truncate(M, N)
        K >>= 1
        if K:
            base = (base * base).truncate(M, N)
    return result


def _check_sizes(M: int, N: int, f: Poly) -> None:
    if M < 1 or N < 1:
        raise DomainError(f"M and N must be >= 1, got M={M}, N={N}")
    if isinstance(f.field, RationalField) and M * N > QQ_RANK_CELL_LIMIT:
        raise DomainError(f"rank over Q limited to M*N <= {QQ_RANK_CELL_LIMIT}, got {M * N}")


def _rank(rows: List[List], f: Poly) -> int:
    if not rows:
        return 0
    if isinstance(f.field, PrimeField):
        return rank_mod_p(rows, f.field.p)
    return bareiss_rank(integer_rows(rows))


def _image_rows(sources: List[Monomial], column: Dict[Monomial, int], g: Poly, M: int, N: int) -> List[List]:
    zero = g.field.zero
    rows = []
    for src in sources:
        row = [zero] * len(column)
        for mono, coeff in g.terms.items():
            i, j = src.i + mono.i, src.j + mono.j
            if i < M and j < N:
                row[column[Monomial(i, j)]] = coeff
        rows.append(row)
    return rows


def length_rank(M: int, N: int, f: Poly, K: int, weights: Optional[Weights] = None) -> int:
    """ell(R/(x^M, y^N, f^K)) by blockwise rank."""
    _check_sizes(M, N, f)
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    if not f:
        raise DomainError("f must be nonzero")
    weights = weights or discover_weights(f)
    if not f.is_homogeneous(weights):
        raise DomainError(f"{f.render()} is not homogeneous for weights {weights}")
    g = truncated_power(f, K, M, N)
    if not g:
        return M * N
    shift = g.weighted_degree(weights)
    plan = GradedRankPlan.build(M, N, weights)
    total = 0
    for degree, sources in plan.blocks.items():
        targets = plan.blocks.get(degree + shift)
        if not targets:
            continue
        column = {mono: idx for idx, mono in enumerate(targets)}
        total += _rank(_image_rows(sources, column, g, M, N), f)
    logger.debug("rank plan %s: rank %d", plan.to_dict()['weights'], total)
    return M * N - total


def dense_rank_length(M: int, N: int, f: Poly, K: int) -> int:
    """Same colength from the full M*N square matrix."""
    _check_sizes(M, N, f)
    g = truncated_power(f, K, M, N)
    monomials = [Monomial(i, j) for i in range(M) for j in range(N)]
    column = {mono: idx for idx, mono in enumerate(monomials)}
    return M * N - _rank(_image_rows(monomials, column, g, M, N), f)


def fsig_oracle(g: Poly, p: int, a: int, e: int = 1, weights: Optional[Weights] = None) -> Fraction:
    """psi_p(a / p^e) = 1 - ell(R/(x^q, y^q, g^a)) / q^2 with q = p^e."""
    if e < 1:
        raise DomainError(f"e must be >= 1, got {e}")
    field = PrimeField(p)
    if g.field != field:
        g = Poly(field, g.terms)
    q = p ** e
    return 1 - Fraction(length_rank(q, q, g, a, weights), q * q)
