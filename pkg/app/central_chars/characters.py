from typing import Tuple

from app.core_math.weights import Ambient, Weight
from app.exceptions import AmbientMismatchError, NotGenericError
from app.root_systems.models import SuperRootData
from app.root_systems.operations import check_weight, lt
from app.weyl.actions import canonical_rep, orbit
from app.weyl.group import WeylGroup
from app.central_chars.evaluation import classify
from app.central_chars.models import CentralCharacter, TypicalityKind, VermaProperties


def g_char_of(data: SuperRootData, G: WeylGroup, lam: Weight) -> CentralCharacter:
    """Central character of the g-Verma module M~(lambda): orbit of lambda + rho"""
    check_weight(data, lam)
    return CentralCharacter(Ambient.G, data.rho, canonical_rep(G, lam + data.rho))


def g0_char_of(data: SuperRootData, G: WeylGroup, mu: Weight) -> CentralCharacter:
    """Central character of the g0-Verma module M(mu): orbit of mu + rho0"""
    check_weight(data, mu)
    return CentralCharacter(Ambient.G0, data.rho0, canonical_rep(G, mu + data.rho0))


def char_of(data: SuperRootData, G: WeylGroup, ambient: Ambient, mu: Weight) -> CentralCharacter:
    if ambient is Ambient.G:
        return g_char_of(data, G, mu)
    return g0_char_of(data, G, mu)


def _require_typical_g(data: SuperRootData, chi_tilde: CentralCharacter) -> None:
    if chi_tilde.ambient is not Ambient.G:
        raise AmbientMismatchError(
            f"Expected a central character of g, got one of {chi_tilde.ambient.value}"
        )
    if classify(data, chi_tilde.weight()).kind is TypicalityKind.ATYPICAL:
        raise NotGenericError(
            f"{chi_tilde} is atypical; its weight set is not a single dot orbit",
            details={"rep": chi_tilde.rep.to_json()},
        )


def weights_of_char(
    data: SuperRootData, G: WeylGroup, chi_tilde: CentralCharacter
) -> Tuple[Weight, ...]:
    """
    The weights lambda with M~(lambda) of central character chi_tilde: one dot orbit

    Raises:
        AmbientMismatchError: If chi_tilde is a g0 character
        NotGenericError: If chi_tilde is atypical
    """
    _require_typical_g(data, chi_tilde)
    return orbit(G, chi_tilde.weight(), shifted_by=data.rho)


def extremal_weights(
    data: SuperRootData, G: WeylGroup, chi_tilde: CentralCharacter
) -> Tuple[Tuple[Weight, ...], Tuple[Weight, ...]]:
    """(maximal, minimal) elements of the dot orbit under the weight order"""
    weights = weights_of_char(data, G, chi_tilde)
    maximal = tuple(mu for mu in weights if not any(lt(data, mu, nu) for nu in weights))
    minimal = tuple(mu for mu in weights if not any(lt(data, nu, mu) for nu in weights))
    return maximal, minimal


def verma_properties(data: SuperRootData, G: WeylGroup, lam: Weight) -> VermaProperties:
    """M~(lambda) is projective in its block iff lambda is dot-maximal, simple iff dot-minimal"""
    chi_tilde = g_char_of(data, G, lam)
    weights = weights_of_char(data, G, chi_tilde)
    return VermaProperties(
        weight=lam,
        projective=not any(lt(data, lam, nu) for nu in weights),
        simple=not any(lt(data, nu, lam) for nu in weights),
        orbit_size=len(weights),
    )
