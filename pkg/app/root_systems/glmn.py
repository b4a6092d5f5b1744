from app.core_math.weights import Weight
from app.root_systems.base import FamilyBuilder, diagonal_form
from app.root_systems.models import FamilyKind, FamilySpec, Form


class GLmnFamily(FamilyBuilder):
    """gl(m,n) on the basis (eps_1..eps_m, delta_1..delta_n), form diag(+1..+1, -1..-1)"""

    def validate(self, spec: FamilySpec) -> None:
        self._require(spec.family is FamilyKind.GLMN, f"{spec.label} is not of type gl(m,n)")

    def form(self, spec: FamilySpec) -> Form:
        return diagonal_form([1] * spec.m + [-1] * spec.n)

    def _basis(self, spec: FamilySpec) -> list[Weight]:
        return [Weight.unit(i, spec.rank, spec.basis_tag) for i in range(spec.rank)]

    def positive_even_roots(self, spec: FamilySpec) -> list[Weight]:
        basis = self._basis(spec)
        eps, delta = basis[: spec.m], basis[spec.m :]
        roots = [eps[i] - eps[j] for i in range(spec.m) for j in range(i + 1, spec.m)]
        roots += [delta[i] - delta[j] for i in range(spec.n) for j in range(i + 1, spec.n)]
        return roots

    def positive_odd_roots(self, spec: FamilySpec) -> list[Weight]:
        basis = self._basis(spec)
        eps, delta = basis[: spec.m], basis[spec.m :]
        return [e - d for e in eps for d in delta]

    def simple_roots(self, spec: FamilySpec) -> list[Weight]:
        basis = self._basis(spec)
        return [basis[i] - basis[i + 1] for i in range(spec.rank - 1)]

    def get_description(self) -> str:
        return (
            "gl(m,n): every odd root is isotropic, so typical and strongly typical agree; "
            "classification support only"
        )
