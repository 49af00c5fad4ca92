from fsigcalc.algorithms.hypotheses import HypothesisCheck
from fsigcalc.algorithms.staircase import colength, staircase_ideal, standard_monomials
from fsigcalc.algorithms.closed_basis import (
    GroebnerBasis,
    IdealSpec,
    closed_groebner,
    f_even,
    f_odd,
    f_recursive,
    g_family,
    g_family_explicit,
    h_family,
    l_family,
    simple_groebner,
    truncated_basis,
)
from fsigcalc.algorithms.lengths import (
    LengthResult,
    LengthRoute,
    length_general,
    length_oracle,
    length_shift,
    length_simple,
    length_wlp,
    staircase_colength,
)

__all__ = [
    "HypothesisCheck",
    "colength",
    "staircase_ideal",
    "standard_monomials",
    "GroebnerBasis",
    "IdealSpec",
    "closed_groebner",
    "f_even",
    "f_odd",
    "f_recursive",
    "g_family",
    "g_family_explicit",
    "h_family",
    "l_family",
    "simple_groebner",
    "truncated_basis",
    "LengthResult",
    "LengthRoute",
    "length_general",
    "length_oracle",
    "length_shift",
    "length_simple",
    "length_wlp",
    "staircase_colength",
]
