from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from app.core_math.weights import Ambient, Weight


@dataclass(frozen=True)
class CentralCharacter:
    """A central character as the canonical representative of a shifted orbit

    rep is the lexicographically greatest element of W(lambda + shift); the
    shift is rho over g and rho0 over g0.
    """

    ambient: Ambient
    shift: Weight
    rep: Weight

    @property
    def key(self) -> str:
        """Stable string key, used for block maps"""
        return str(self.rep)

    def weight(self) -> Weight:
        """The orbit representative rep - shift, a highest weight with this character"""
        return self.rep - self.shift

    def __str__(self) -> str:
        name = "chi~" if self.ambient is Ambient.G else "chi"
        return f"{name}{self.rep}"


class TypicalityKind(str, Enum):
    STRONGLY_TYPICAL = "StronglyTypical"
    TYPICAL_NOT_STRONG = "TypicalNotStrong"
    ATYPICAL = "Atypical"


@dataclass(frozen=True)
class Classification:
    """Typicality of the central character of M~(lambda)"""

    weight: Weight
    kind: TypicalityKind
    vanishing_odd_roots: Tuple[Weight, ...]
    generic_weakly_atypical: bool
    t_value: Fraction
    q_value: Fraction

    @property
    def is_typical(self) -> bool:
        return self.kind is not TypicalityKind.ATYPICAL


@dataclass(frozen=True)
class VermaProperties:
    """Position of lambda in its dot orbit"""

    weight: Weight
    projective: bool
    simple: bool
    orbit_size: int
