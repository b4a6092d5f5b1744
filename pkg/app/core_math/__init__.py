"""Exact scalars and weights

The truncated-character oracle lives in app.core_math.characters; it depends
on the root-system registry and is imported from there directly.
"""

from app.core_math.rational import (
    Rational,
    format_rational,
    format_rational_list,
    is_integral,
    parse_rational,
    parse_rational_list,
)
from app.core_math.weights import Ambient, Weight, WeightFunction, descending_order, weight_sum

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "parse_rational_list",
    "format_rational_list",
    "is_integral",
    "Ambient",
    "Weight",
    "WeightFunction",
    "weight_sum",
    "descending_order",
]
