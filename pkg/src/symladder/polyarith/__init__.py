"""Exact polynomial arithmetic and the Groebner-basis verification oracle."""

from .groebner import (Bounds, DEFAULT_BOUNDS, contains, groebner, height, is_groebner,
                       krull_dimension, normal_form, reduce_with_quotients, spoly)
from .poly import MonomialOrder, Poly, Ring

__all__ = [
    "Bounds", "DEFAULT_BOUNDS", "MonomialOrder", "Poly", "Ring", "contains", "groebner",
    "height", "is_groebner", "krull_dimension", "normal_form", "reduce_with_quotients",
    "spoly",
]
