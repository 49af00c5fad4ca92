from fsigcalc.oracle.rank import (
    GradedRankPlan,
    dense_rank_length,
    discover_weights,
    fsig_oracle,
    length_rank,
    truncated_power,
)
from fsigcalc.oracle.buchberger import (
    GroebnerCertificate,
    buchberger,
    ideal_generators,
    is_groebner,
    standard_monomial_count,
)

__all__ = [
    "GradedRankPlan",
    "dense_rank_length",
    "discover_weights",
    "fsig_oracle",
    "length_rank",
    "truncated_power",
    "GroebnerCertificate",
    "buchberger",
    "ideal_generators",
    "is_groebner",
    "standard_monomial_count",
]
