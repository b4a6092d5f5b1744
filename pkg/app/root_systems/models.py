"""Root-system data models"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import sympy as sp

from app.core_math.weights import Weight
from app.exceptions import FamilyError


class FamilyKind(str, Enum):
    """Supported super root-system families"""

    B0N = "B0n"  # osp(1,2n)
    GLMN = "GLmn"  # gl(m,n)
    BMN = "Bmn"  # osp(2m+1,2n), m >= 1


@dataclass(frozen=True)
class FamilySpec:
    """A family together with its (m, n) parameters"""

    family: FamilyKind
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise FamilyError(f"{self.family.value} requires n >= 1, got n={self.n}")
        if self.m < 0:
            raise FamilyError(f"{self.family.value} requires m >= 0, got m={self.m}")
        if self.family is FamilyKind.B0N and self.m != 0:
            raise FamilyError(f"B0n requires m = 0, got m={self.m}; use Bmn for osp(2m+1,2n)")
        if self.family is FamilyKind.GLMN and self.m < 1:
            raise FamilyError(f"gl(m,n) requires m >= 1, got m={self.m}")
        if self.family is FamilyKind.BMN and self.m == 0:
            raise FamilyError("Bmn requires m >= 1; B(0,n) is the family B0n")

    @classmethod
    def b0n(cls, n: int) -> "FamilySpec":
        return cls(FamilyKind.B0N, 0, n)

    @classmethod
    def glmn(cls, m: int, n: int) -> "FamilySpec":
        return cls(FamilyKind.GLMN, m, n)

    @classmethod
    def bmn(cls, m: int, n: int) -> "FamilySpec":
        return cls(FamilyKind.BMN, m, n)

    @property
    def rank(self) -> int:
        if self.family is FamilyKind.B0N:
            return self.n
        return self.m + self.n

    @property
    def label(self) -> str:
        if self.family is FamilyKind.GLMN:
            return f"gl({self.m},{self.n})"
        return f"B({self.m},{self.n})"

    @property
    def basis_tag(self) -> str:
        return self.label

    def __str__(self) -> str:
        return self.label


# exact Gram matrix of the invariant form on the weight basis
Form = sp.ImmutableMatrix


@dataclass(frozen=True)
class SuperRootData:
    """Positive roots, invariant form, simple roots and rho-vectors of one family

    Invariants (established by FamilyBuilder.build):
      rho0 = 1/2 sum(delta0_plus), rho1 = 1/2 sum(delta1_plus), rho = rho0 - rho1;
      delta1_plus_isotropic = odd positive roots of square length zero.
    """

    spec: FamilySpec
    delta0_plus: Tuple[Weight, ...]
    delta1_plus: Tuple[Weight, ...]
    delta1_plus_isotropic: Tuple[Weight, ...]
    form: Form
    simple_roots: Tuple[Weight, ...]
    even_simple_roots: Tuple[Weight, ...]
    rho: Weight
    rho0: Weight
    rho1: Weight

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def basis_tag(self) -> str:
        return self.spec.basis_tag

    @property
    def family(self) -> FamilyKind:
        return self.spec.family

    def zero(self) -> Weight:
        return Weight.zero(self.rank, self.basis_tag)

    def weight(self, *values) -> Weight:
        """Build a weight in this family's basis from ints, Fractions or "p/q" strings"""
        return Weight.of(values, self.basis_tag)

    def __str__(self) -> str:
        return f"SuperRootData({self.spec.label})"
