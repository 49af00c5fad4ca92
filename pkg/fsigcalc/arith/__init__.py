from fsigcalc.arith.field import QQ, BigRational, CoeffField, PrimeField, RationalField, parse_field
from fsigcalc.arith.binomial import (
    binom,
    binom_matrix,
    det_binomial_formula,
    det_binomial_naive,
    det_binomial_nonzero_mod,
)

__all__ = [
    "QQ",
    "BigRational",
    "CoeffField",
    "PrimeField",
    "RationalField",
    "parse_field",
    "binom",
    "binom_matrix",
    "det_binomial_formula",
    "det_binomial_naive",
    "det_binomial_nonzero_mod",
]
