from app.core_math.weights import Ambient, Weight
from app.exceptions import ValidationError
from app.root_systems.models import SuperRootData
from app.root_systems.operations import check_weight, require_b0n
from app.verma_flags.gamma import gamma_sets
from app.verma_flags.models import FlagEntry, GradedVermaFlag


def _check_parity(parity: int) -> int:
    if parity not in (0, 1):
        raise ValidationError(f"Parity must be 0 or 1, got {parity}")
    return parity


def verma_flag(ambient: Ambient, weight: Weight, parity: int = 0) -> GradedVermaFlag:
    """The flag of a single Verma module"""
    return GradedVermaFlag.single(ambient, weight, _check_parity(parity))


def restriction_flag(data: SuperRootData, lam: Weight, base_parity: int = 0) -> GradedVermaFlag:
    """
    Verma flag over g0 of the restriction of M~(lambda)

    Entries (lambda - gamma, |gamma| + base_parity mod 2) for gamma in Gamma;
    base parity 0 makes the highest weight vector even.

    Raises:
        FamilyError: If data is not of type B(0,n)
    """
    require_b0n(data, "restriction_flag")
    check_weight(data, lam)
    _check_parity(base_parity)
    cube = gamma_sets(data.rank, data.basis_tag)
    counts: dict[FlagEntry, int] = {}
    for parity in (0, 1):
        for gamma in cube.part(parity):
            entry = FlagEntry(lam - gamma, (parity + base_parity) % 2)
            counts[entry] = counts.get(entry, 0) + 1
    return GradedVermaFlag(Ambient.G0, counts)


def induction_flag(data: SuperRootData, mu: Weight, base_parity: int = 0) -> GradedVermaFlag:
    """
    Verma flag over g of the module induced from M(mu)

    Entries (mu + gamma, |gamma| + base_parity mod 2) for gamma in Gamma.

    Raises:
        FamilyError: If data is not of type B(0,n)
    """
    require_b0n(data, "induction_flag")
    check_weight(data, mu)
    _check_parity(base_parity)
    cube = gamma_sets(data.rank, data.basis_tag)
    counts: dict[FlagEntry, int] = {}
    for parity in (0, 1):
        for gamma in cube.part(parity):
            entry = FlagEntry(mu + gamma, (parity + base_parity) % 2)
            counts[entry] = counts.get(entry, 0) + 1
    return GradedVermaFlag(Ambient.G, counts)
