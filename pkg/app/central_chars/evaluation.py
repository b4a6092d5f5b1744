"""Harish-Chandra images of the ghost elements T and Q, and typicality"""

from fractions import Fraction
from typing import Iterable

from app.core_math.weights import Weight
from app.logger import get_logger
from app.root_systems.models import SuperRootData
from app.root_systems.operations import check_weight, inner
from app.central_chars.models import Classification, TypicalityKind

logger = get_logger("central_chars")


def _product(data: SuperRootData, roots: Iterable[Weight], shifted: Weight) -> Fraction:
    result = Fraction(1)
    for beta in roots:
        result *= inner(data, beta, shifted)
    return result


def eval_T(data: SuperRootData, lam: Weight) -> Fraction:
    """prod over odd positive beta of (beta, lambda + rho)"""
    check_weight(data, lam)
    return _product(data, data.delta1_plus, lam + data.rho)


def eval_Q(data: SuperRootData, lam: Weight) -> Fraction:
    """prod over isotropic odd positive beta of (beta, lambda + rho); 1 when there are none"""
    check_weight(data, lam)
    return _product(data, data.delta1_plus_isotropic, lam + data.rho)


def classify(data: SuperRootData, lam: Weight) -> Classification:
    """
    Classify the central character of M~(lambda)

    Atypical when Q vanishes, typical but not strongly typical when only T
    vanishes, strongly typical otherwise. Generic weak atypicality means
    exactly one odd positive root is orthogonal to lambda + rho.

    Raises:
        RankMismatchError: If lambda is not in the basis of data
    """
    check_weight(data, lam)
    shifted = lam + data.rho
    vanishing = tuple(beta for beta in data.delta1_plus if inner(data, beta, shifted) == 0)
    t_value = eval_T(data, lam)
    q_value = eval_Q(data, lam)

    if q_value == 0:
        kind = TypicalityKind.ATYPICAL
    elif t_value == 0:
        kind = TypicalityKind.TYPICAL_NOT_STRONG
    else:
        kind = TypicalityKind.STRONGLY_TYPICAL

    logger.debug(
        "Classified weight",
        family=data.spec.label,
        weight=str(lam),
        kind=kind.value,
        vanishing=len(vanishing),
    )
    return Classification(
        weight=lam,
        kind=kind,
        vanishing_odd_roots=vanishing,
        generic_weakly_atypical=len(vanishing) == 1,
        t_value=t_value,
        q_value=q_value,
    )
