from app.weyl.actions import (
    act,
    canonical_rep,
    dot,
    dot_orbit,
    in_same_orbit,
    orbit,
    stabilizer,
    star,
)
from app.weyl.group import WeylElement, WeylGroup, generate, reflection_matrix

__all__ = [
    "WeylElement",
    "WeylGroup",
    "generate",
    "reflection_matrix",
    "act",
    "dot",
    "star",
    "orbit",
    "dot_orbit",
    "stabilizer",
    "canonical_rep",
    "in_same_orbit",
]
