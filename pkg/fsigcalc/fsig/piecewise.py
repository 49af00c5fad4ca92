# fsigcalc/fsig/piecewise.py
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from fsigcalc.exceptions import DomainError, VerificationFailure

Coeffs = Tuple[Fraction, Fraction, Fraction]


def _eval(coeffs: Coeffs, t: Fraction) -> Fraction:
    c0, c1, c2 = coeffs
    return c0 + c1 * t + c2 * t * t


@dataclass(frozen=True)
class PiecewiseFn:
    """Quadratic pieces on [b_i, b_{i+1}); zero from the last breakpoint on.

    breakpoints[0] is 0 and breakpoints[-1] is the threshold lambda.
    """
    breakpoints: Tuple[Fraction, ...]
    pieces: Tuple[Coeffs, ...]

    def __post_init__(self):
        if len(self.breakpoints) < 2 or self.breakpoints[0] != 0:
            raise DomainError("breakpoints must start at 0 and contain the threshold")
        if any(lo >= hi for lo, hi in zip(self.breakpoints, self.breakpoints[1:])):
            raise DomainError(f"breakpoints must increase strictly: {self.breakpoints}")
        if len(self.pieces) != len(self.breakpoints) - 1:
            raise DomainError("need one piece per interval")

    @classmethod
    def build(cls, breakpoints: Sequence, pieces: Sequence[Sequence]) -> "PiecewiseFn":
        """Normalize to Fractions, merge equal neighbours and check continuity."""
        points = [Fraction(b) for b in breakpoints]
        coeffs = [tuple(Fraction(c) for c in piece) for piece in pieces]
        merged_points = [points[0]]
        merged = []
        for idx, piece in enumerate(coeffs):
            if merged and merged[-1] == piece:
                merged_points[-1] = points[idx + 1]
                continue
            merged.append(piece)
            merged_points.append(points[idx + 1])
        fn = cls(tuple(merged_points), tuple(merged))
        fn.check_continuity()
        return fn

    @property
    def lam(self) -> Fraction:
        return self.breakpoints[-1]

    def _index(self, t: Fraction) -> int:
        if t < 0:
            raise DomainError(f"t must be >= 0, got {t}")
        return bisect_right(self.breakpoints, t) - 1

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        idx = self._index(t)
        if idx >= len(self.pieces):
            return Fraction(0)
        return _eval(self.pieces[idx], t)

    def right_derivative(self, t) -> Fraction:
        t = Fraction(t)
        idx = self._index(t)
        if idx >= len(self.pieces):
            return Fraction(0)
        _, c1, c2 = self.pieces[idx]
        return c1 + 2 * c2 * t

    def check_continuity(self) -> None:
        for idx in range(1, len(self.pieces)):
            point = self.breakpoints[idx]
            left = _eval(self.pieces[idx - 1], point)
            right = _eval(self.pieces[idx], point)
            if left != right:
                raise VerificationFailure("piecewise continuity", {'t': point}, left, right)

    def sample_grid(self, count: int = 20) -> List[Fraction]:
        return [self.lam * i / count for i in range(count + 1)]

    def check_invariants(self, samples: int = 100) -> bool:
        """psi(0) = 1, continuity, psi(lambda) = 0, non-increasing and midpoint convex."""
        if self(0) != 1:
            raise VerificationFailure("psi(0) = 1", {}, 1, self(0))
        self.check_continuity()
        at_lam = _eval(self.pieces[-1], self.lam)
        if at_lam != 0:
            raise VerificationFailure("psi(lambda) = 0", {'lambda': self.lam}, 0, at_lam)
        grid = self.sample_grid(20)
        values = [self(t) for t in grid]
        for t, prev, cur in zip(grid[1:], values, values[1:]):
            if cur > prev:
                raise VerificationFailure("non-increasing", {'t': t}, f"<= {prev}", cur)
        checked = 0
        for i, lo in enumerate(grid):
            for hi in grid[i + 2:]:
                if checked >= samples:
                    return True
                mid = (lo + hi) / 2
                if 2 * self(mid) > self(lo) + self(hi):
                    raise VerificationFailure("midpoint convexity", {'lo': lo, 'hi': hi},
                                              f"<= {(self(lo) + self(hi)) / 2}", self(mid))
                checked += 1
        return True

    def to_dict(self) -> Dict:
        return {
            'breakpoints': [str(b) for b in self.breakpoints],
            'pieces': [{'coeffs': [str(c) for c in piece]} for piece in self.pieces],
            'lambda': str(self.lam),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "PiecewiseFn":
        return cls.build(data['breakpoints'], [p['coeffs'] for p in data['pieces']])

    def agrees_with(self, other: "PiecewiseFn", points: Iterable) -> bool:
        return all(self(t) == other(t) for t in points)
