from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

import sympy as sp

from app.core_math.weights import Weight, weight_sum
from app.exceptions import FamilyError
from app.logger import get_logger
from app.root_systems.models import FamilySpec, Form, SuperRootData

logger = get_logger("root_systems")

HALF = Fraction(1, 2)


def to_sympy(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


def to_fraction(value: sp.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def as_column(mu: Weight) -> sp.ImmutableMatrix:
    """mu as an exact sympy column vector"""
    return sp.ImmutableMatrix([to_sympy(c) for c in mu.coords])


def from_column(column: Iterable[sp.Rational], basis_tag: str) -> Weight:
    return Weight(tuple(to_fraction(x) for x in column), basis_tag)


def form_inner(form: Form, mu: Weight, nu: Weight) -> Fraction:
    """mu^T . form . nu, exact"""
    return to_fraction((as_column(mu).T * form * as_column(nu))[0, 0])


def form_entries(form: Form) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(to_fraction(x) for x in form.row(i)) for i in range(form.rows))


def diagonal_form(signs: Sequence[int]) -> Form:
    return sp.ImmutableMatrix(sp.diag(*signs))


@lru_cache(maxsize=65536)
def solve_coordinates(basis: Tuple[Weight, ...], nu: Weight) -> Optional[Tuple[Fraction, ...]]:
    """
    Exact coordinates of nu in the span of basis, or None if nu is outside it

    The basis vectors are assumed linearly independent.
    """
    if not basis:
        return () if nu.is_zero() else None
    matrix = sp.Matrix.hstack(*(as_column(b) for b in basis))
    try:
        solution, params = matrix.gauss_jordan_solve(as_column(nu))
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return tuple(to_fraction(x) for x in solution)


class FamilyBuilder(ABC):
    """Base class for super root-system family builders"""

    @abstractmethod
    def validate(self, spec: FamilySpec) -> None:
        """Raise FamilyError if spec does not belong to this family"""
        pass

    @abstractmethod
    def form(self, spec: FamilySpec) -> Form:
        """The invariant bilinear form on the weight basis"""
        pass

    @abstractmethod
    def positive_even_roots(self, spec: FamilySpec) -> list[Weight]:
        pass

    @abstractmethod
    def positive_odd_roots(self, spec: FamilySpec) -> list[Weight]:
        pass

    @abstractmethod
    def simple_roots(self, spec: FamilySpec) -> list[Weight]:
        """Simple roots of the distinguished triangular decomposition"""
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Get a human-readable description of the family"""
        pass

    def supports_gamma_flags(self) -> bool:
        """Whether the Gamma-flag, mate and equivalence machinery applies"""
        return False

    def simple_coordinates(
        self, data: SuperRootData, nu: Weight
    ) -> Optional[Tuple[Fraction, ...]]:
        """Coefficients of nu over data.simple_roots, or None outside their span"""
        return solve_coordinates(data.simple_roots, nu)

    def build(self, spec: FamilySpec) -> SuperRootData:
        """
        Build fully populated root data for spec

        Raises:
            FamilyError: If spec does not belong to this family
        """
        self.validate(spec)
        tag, rank = spec.basis_tag, spec.rank
        form = self.form(spec)

        delta0 = tuple(self.positive_even_roots(spec))
        delta1 = tuple(self.positive_odd_roots(spec))
        isotropic = tuple(beta for beta in delta1 if form_inner(form, beta, beta) == 0)

        even_set = set(delta0)
        even_simple = tuple(
            alpha
            for alpha in delta0
            if not any((alpha - beta) in even_set for beta in delta0 if beta != alpha)
        )

        rho0 = weight_sum(delta0, rank, tag).scale(HALF)
        rho1 = weight_sum(delta1, rank, tag).scale(HALF)

        data = SuperRootData(
            spec=spec,
            delta0_plus=delta0,
            delta1_plus=delta1,
            delta1_plus_isotropic=isotropic,
            form=form,
            simple_roots=tuple(self.simple_roots(spec)),
            even_simple_roots=even_simple,
            rho=rho0 - rho1,
            rho0=rho0,
            rho1=rho1,
        )
        logger.debug(
            "Root data built",
            family=spec.label,
            even=len(delta0),
            odd=len(delta1),
            isotropic=len(isotropic),
        )
        return data

    def _require(self, condition: bool, message: str) -> None:
        if not condition:
            raise FamilyError(message)
