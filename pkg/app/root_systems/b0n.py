from fractions import Fraction
from typing import Optional, Tuple

from app.core_math.weights import Weight
from app.root_systems.base import FamilyBuilder, diagonal_form
from app.root_systems.models import FamilyKind, FamilySpec, Form, SuperRootData


class B0nFamily(FamilyBuilder):
    """osp(1,2l): odd roots sigma_i, even roots sigma_i +- sigma_j and 2 sigma_i"""

    def validate(self, spec: FamilySpec) -> None:
        self._require(spec.family is FamilyKind.B0N, f"{spec.label} is not of type B(0,n)")

    def form(self, spec: FamilySpec) -> Form:
        return diagonal_form([1] * spec.n)

    def _sigma(self, spec: FamilySpec, i: int) -> Weight:
        return Weight.unit(i, spec.n, spec.basis_tag)

    def positive_even_roots(self, spec: FamilySpec) -> list[Weight]:
        l = spec.n
        roots = []
        for i in range(l):
            for j in range(i + 1, l):
                roots.append(self._sigma(spec, i) - self._sigma(spec, j))
                roots.append(self._sigma(spec, i) + self._sigma(spec, j))
        roots.extend(self._sigma(spec, i).scale(2) for i in range(l))
        return roots

    def positive_odd_roots(self, spec: FamilySpec) -> list[Weight]:
        return [self._sigma(spec, i) for i in range(spec.n)]

    def simple_roots(self, spec: FamilySpec) -> list[Weight]:
        l = spec.n
        roots = [self._sigma(spec, i) - self._sigma(spec, i + 1) for i in range(l - 1)]
        roots.append(self._sigma(spec, l - 1))
        return roots

    def supports_gamma_flags(self) -> bool:
        return True

    def simple_coordinates(
        self, data: SuperRootData, nu: Weight
    ) -> Optional[Tuple[Fraction, ...]]:
        # over sigma_1 - sigma_2, ..., sigma_{l-1} - sigma_l, sigma_l: partial sums
        coords = []
        running = Fraction(0)
        for value in nu.coords:
            running += value
            coords.append(running)
        return tuple(coords)

    def get_description(self) -> str:
        return (
            "B(0,n) = osp(1,2n): no isotropic roots, every central character typical; "
            "full support including Gamma flags, mates and the equivalence functors"
        )
