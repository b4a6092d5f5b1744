from functools import lru_cache

from app.core_math.weights import Weight
from app.exceptions import GammaError, ValidationError
from app.verma_flags.models import GammaSet

GAMMA_TAG_PREFIX = "B(0,"


@lru_cache(maxsize=16)
def gamma_sets(l: int, basis_tag: str | None = None) -> GammaSet:
    """
    The 0/1 cube of rank l and its even / odd coordinate-sum halves

    Vectors are listed in binary counting order with coordinate 1 as the
    least significant bit: (0,0), (1,0), (0,1), (1,1) for l = 2.

    Raises:
        ValidationError: If l < 1
    """
    if l < 1:
        raise ValidationError(f"Gamma sets need l >= 1, got {l}")
    tag = basis_tag or f"{GAMMA_TAG_PREFIX}{l})"
    gamma = tuple(
        Weight.of(((code >> bit) & 1 for bit in range(l)), tag) for code in range(2**l)
    )
    return GammaSet(
        l=l,
        gamma=gamma,
        gamma0=tuple(g for g in gamma if gamma_parity(g) == 0),
        gamma1=tuple(g for g in gamma if gamma_parity(g) == 1),
    )


def is_in_gamma(gamma: Weight) -> bool:
    return all(c in (0, 1) for c in gamma.coords)


def gamma_parity(gamma: Weight) -> int:
    """|gamma| mod 2"""
    if not is_in_gamma(gamma):
        raise GammaError(f"{gamma} is not a 0/1 vector", details={"received": gamma.to_json()})
    return int(gamma.coordinate_sum()) % 2


def sigma(l: int, index: int, basis_tag: str | None = None) -> Weight:
    """sigma_index (1-based) in the basis of B(0,l)"""
    return Weight.unit(index - 1, l, basis_tag or f"{GAMMA_TAG_PREFIX}{l})")
