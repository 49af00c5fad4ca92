"""Exact F-signature computations for x^a y^b (x^u + y^v)^c in two variables."""

__version__ = "1.0.0"
