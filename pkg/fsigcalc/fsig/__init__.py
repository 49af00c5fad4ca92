from fsigcalc.fsig.thresholds import INF, Infinity, ThresholdInfo, lct_general, lct_simple, reciprocal
from fsigcalc.fsig.piecewise import PiecewiseFn
from fsigcalc.fsig.signature import (
    ConvergenceRow,
    convergence_rows,
    cover_exponents,
    empirical_fsig,
    fpt_sanity,
    fsig_at_p,
    fsig_monomial,
    limit_fsig_general,
    limit_fsig_rational_exponents,
    limit_fsig_simple,
    limit_hk_multiplicity,
    limit_via_cover,
    non_stabilization_witness,
)
from fsigcalc.fsig.nvol import corollary_b_check, nvol_simple

__all__ = [
    "INF",
    "Infinity",
    "ThresholdInfo",
    "lct_general",
    "lct_simple",
    "reciprocal",
    "PiecewiseFn",
    "ConvergenceRow",
    "convergence_rows",
    "cover_exponents",
    "empirical_fsig",
    "fpt_sanity",
    "fsig_at_p",
    "fsig_monomial",
    "limit_fsig_general",
    "limit_fsig_rational_exponents",
    "limit_fsig_simple",
    "limit_hk_multiplicity",
    "limit_via_cover",
    "non_stabilization_witness",
    "corollary_b_check",
    "nvol_simple",
]
