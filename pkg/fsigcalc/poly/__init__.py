from fsigcalc.poly.polynomial import (
    ORDER,
    Monomial,
    MonomialOrder,
    Poly,
    divide,
    minimalize,
    normal_form,
    power_xy,
    s_polynomial,
    x_power,
    y_power,
)

__all__ = [
    "ORDER",
    "Monomial",
    "MonomialOrder",
    "Poly",
    "divide",
    "minimalize",
    "normal_form",
    "power_xy",
    "s_polynomial",
    "x_power",
    "y_power",
]
