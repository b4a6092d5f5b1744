from app.core_math.weights import Weight
from app.root_systems.base import FamilyBuilder, diagonal_form
from app.root_systems.models import FamilyKind, FamilySpec, Form


class BmnFamily(FamilyBuilder):
    """osp(2m+1,2n) on the basis (eps_1..eps_m, delta_1..delta_n)

    The eps directions carry -1 and the delta directions +1 in the form, so
    that B(0,n) sits inside with (sigma_i, sigma_j) = delta_ij.
    """

    def validate(self, spec: FamilySpec) -> None:
        self._require(spec.family is FamilyKind.BMN, f"{spec.label} is not of type B(m,n)")

    def form(self, spec: FamilySpec) -> Form:
        return diagonal_form([-1] * spec.m + [1] * spec.n)

    def _split(self, spec: FamilySpec) -> tuple[list[Weight], list[Weight]]:
        basis = [Weight.unit(i, spec.rank, spec.basis_tag) for i in range(spec.rank)]
        return basis[: spec.m], basis[spec.m :]

    def positive_even_roots(self, spec: FamilySpec) -> list[Weight]:
        eps, delta = self._split(spec)
        m, n = spec.m, spec.n
        roots = []
        for i in range(m):
            for j in range(i + 1, m):
                roots.append(eps[i] - eps[j])
                roots.append(eps[i] + eps[j])
        roots.extend(eps)
        for i in range(n):
            for j in range(i + 1, n):
                roots.append(delta[i] - delta[j])
                roots.append(delta[i] + delta[j])
        roots.extend(d.scale(2) for d in delta)
        return roots

    def positive_odd_roots(self, spec: FamilySpec) -> list[Weight]:
        eps, delta = self._split(spec)
        roots = []
        for d in delta:
            for e in eps:
                roots.append(d - e)
                roots.append(d + e)
            roots.append(d)
        return roots

    def simple_roots(self, spec: FamilySpec) -> list[Weight]:
        # delta_1 - delta_2, ..., delta_n - eps_1, eps_1 - eps_2, ..., eps_m
        eps, delta = self._split(spec)
        roots = [delta[i] - delta[i + 1] for i in range(spec.n - 1)]
        roots.append(delta[-1] - eps[0])
        roots += [eps[i] - eps[i + 1] for i in range(spec.m - 1)]
        roots.append(eps[-1])
        return roots

    def get_description(self) -> str:
        return (
            "B(m,n) = osp(2m+1,2n), m >= 1: both isotropic and non-isotropic odd roots, "
            "so typical but not strongly typical characters exist; classification support only"
        )
