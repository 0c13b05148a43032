"""Supports, Koszul objects and totalization for graded rings over F_p."""

from .algebra import AlgebraError, GradedPoly, GradedRing, PrimeField
from .groebner import (
    GroebnerBasis,
    Ideal,
    PresentationMatrix,
    ResourceError,
    annihilator,
    buchberger,
    colon_ideal,
    ideal_membership,
    intersect,
    normal_form,
    radical_membership,
    syzygies,
)

__all__ = [
    "AlgebraError", "GradedPoly", "GradedRing", "PrimeField",
    "GroebnerBasis", "Ideal", "PresentationMatrix", "ResourceError",
    "annihilator", "buchberger", "colon_ideal", "ideal_membership", "intersect",
    "normal_form", "radical_membership", "syzygies",
]
