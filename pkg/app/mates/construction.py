from typing import Tuple

from app.core_math.weights import Ambient, Weight
from app.exceptions import AmbientMismatchError, NotGenericError
from app.logger import get_logger
from app.root_systems.models import SuperRootData
from app.root_systems.operations import require_b0n
from app.weyl.actions import orbit
from app.weyl.group import WeylGroup
from app.central_chars.characters import g0_char_of
from app.central_chars.evaluation import classify
from app.central_chars.models import CentralCharacter

logger = get_logger("mates")


def choose_lambda(data: SuperRootData, G: WeylGroup, chi_tilde: CentralCharacter) -> Weight:
    """
    The highest weight lambda of chi_tilde with lambda + rho = (k_1, ..., k_{l-1}, 0),
    k_1, ..., k_{l-1} > 0, lexicographically greatest among such

    Raises:
        FamilyError: If data is not of type B(0,n)
        AmbientMismatchError: If chi_tilde is not a g character
        NotGenericError: If chi_tilde is not generic weakly atypical
    """
    require_b0n(data, "choose_lambda")
    if chi_tilde.ambient is not Ambient.G:
        raise AmbientMismatchError(
            f"Expected a central character of g, got one of {chi_tilde.ambient.value}"
        )
    classification = classify(data, chi_tilde.weight())
    if not classification.generic_weakly_atypical:
        raise NotGenericError(
            f"{chi_tilde} is not generic weakly atypical: "
            f"{len(classification.vanishing_odd_roots)} odd roots are orthogonal to lambda + rho",
            details={
                "rep": chi_tilde.rep.to_json(),
                "vanishing_roots": [b.to_json() for b in classification.vanishing_odd_roots],
            },
        )

    candidates = [
        point
        for point in orbit(G, chi_tilde.rep)
        if point.coords[-1] == 0 and all(c > 0 for c in point.coords[:-1])
    ]
    if not candidates:
        raise NotGenericError(
            f"No representative of {chi_tilde} has the form (k_1, ..., k_(l-1), 0) with k_i > 0",
            details={"rep": chi_tilde.rep.to_json()},
        )
    # orbit() is sorted greatest first
    return candidates[0] - data.rho


def construct_mate(
    data: SuperRootData, G: WeylGroup, chi_tilde: CentralCharacter
) -> Tuple[Weight, CentralCharacter]:
    """The pair (lambda, central character of M(lambda)) for chi_tilde"""
    lam = choose_lambda(data, G, chi_tilde)
    chi = g0_char_of(data, G, lam)
    logger.debug("Mate constructed", chi_tilde=str(chi_tilde), lam=str(lam), chi=str(chi))
    return lam, chi
