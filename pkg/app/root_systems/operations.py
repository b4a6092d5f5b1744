"""Operations on root data: the form, the weight partial order, heights

Every function takes the SuperRootData it works in and raises
RankMismatchError when a weight is not in that family's basis.
"""

from fractions import Fraction
from typing import Optional, Tuple

from app.core_math.rational import is_integral
from app.core_math.weights import Weight
from app.exceptions import FamilyError, RankMismatchError
from app.root_systems.base import form_inner, solve_coordinates
from app.root_systems.models import FamilyKind, SuperRootData
from app.root_systems.registry import builder_for


def check_weight(data: SuperRootData, mu: Weight, what: str = "weight") -> None:
    """Raise RankMismatchError unless mu lives in the basis of data"""
    if mu.rank != data.rank or mu.basis_tag != data.basis_tag:
        raise RankMismatchError(
            f"{data.basis_tag}[{data.rank}]", f"{mu.basis_tag}[{mu.rank}]", what=what
        )


def require_b0n(data: SuperRootData, operation: str) -> None:
    """Raise FamilyError for operations only defined on osp(1,2l)"""
    if not builder_for(data).supports_gamma_flags() or data.family is not FamilyKind.B0N:
        raise FamilyError(
            f"{operation} is only defined for B(0,n) = osp(1,2n), got {data.spec.label}",
            details={"family": data.spec.label},
        )


def inner(data: SuperRootData, mu: Weight, nu: Weight) -> Fraction:
    """The invariant form (mu, nu)"""
    check_weight(data, mu)
    check_weight(data, nu)
    return form_inner(data.form, mu, nu)


def simple_coordinates(data: SuperRootData, nu: Weight) -> Optional[Tuple[Fraction, ...]]:
    """Coefficients of nu over data.simple_roots, None when nu is outside their span"""
    check_weight(data, nu)
    return builder_for(data).simple_coordinates(data, nu)


def height(data: SuperRootData, nu: Weight) -> Fraction:
    """
    Sum of the simple-root coefficients of nu

    Raises:
        FamilyError: If nu is not in the span of the simple roots
    """
    coords = simple_coordinates(data, nu)
    if coords is None:
        raise FamilyError(f"{nu} is not in the span of the simple roots of {data.spec.label}")
    return sum(coords, Fraction(0))


def leq(data: SuperRootData, nu: Weight, mu: Weight) -> bool:
    """nu <= mu iff mu - nu is an N-combination of the simple roots"""
    check_weight(data, nu)
    check_weight(data, mu)
    coords = simple_coordinates(data, mu - nu)
    if coords is None:
        return False
    return is_integral(coords) and all(c >= 0 for c in coords)


def lt(data: SuperRootData, nu: Weight, mu: Weight) -> bool:
    return nu != mu and leq(data, nu, mu)


def isotropic_roots(data: SuperRootData) -> list[Weight]:
    return list(data.delta1_plus_isotropic)


def same_parity(data: SuperRootData, mu: Weight, nu: Weight) -> bool:
    """True iff mu - nu lies in the integer span of the even roots"""
    check_weight(data, mu)
    check_weight(data, nu)
    coords = solve_coordinates(data.even_simple_roots, mu - nu)
    return coords is not None and is_integral(coords)


def typicality_notions_coincide(data: SuperRootData) -> bool:
    """True iff every odd positive root is isotropic, so typical means strongly typical"""
    return len(data.delta1_plus) == len(data.delta1_plus_isotropic)
