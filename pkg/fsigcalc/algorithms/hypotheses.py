# fsigcalc/algorithms/hypotheses.py
from dataclasses import dataclass, field
from typing import Any, Dict

from fsigcalc.arith.field import CoeffField
from fsigcalc.exceptions import HypothesisViolation


@dataclass(frozen=True)
class HypothesisCheck:
    """One checked inequality and its outcome"""
    inequality: str
    holds: bool
    values: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self):
        return {
            'inequality': self.inequality,
            'holds': self.holds,
            'values': {k: str(v) for k, v in self.values.items()},
        }


def check(inequality: str, holds: bool, **values) -> HypothesisCheck:
    return HypothesisCheck(inequality=inequality, holds=bool(holds), values=values)


def require(result: HypothesisCheck) -> HypothesisCheck:
    if not result.holds:
        raise HypothesisViolation(result.inequality, result.values)
    return result


def char_p_bound(field: CoeffField, inequality: str, bound: int, **values) -> HypothesisCheck:
    """`bound <= p` in characteristic p; vacuous over Q."""
    p = field.characteristic
    if p == 0:
        return check(f"{inequality} (characteristic 0)", True, **values)
    return check(inequality, bound <= p, p=p, **values)
