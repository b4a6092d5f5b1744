from dataclasses import dataclass
from typing import Dict, Tuple

from app.core_math.weights import Weight
from app.logger import get_logger
from app.root_systems.models import SuperRootData
from app.root_systems.operations import require_b0n
from app.weyl.group import WeylGroup
from app.central_chars.characters import char_of
from app.central_chars.models import CentralCharacter
from app.verma_flags.flags import restriction_flag
from app.verma_flags.models import FlagEntry, GradedVermaFlag

logger = get_logger("verma_flags")


@dataclass(frozen=True)
class SupportEntry:
    """One central character in the support of a restricted g-Verma module"""

    character: CentralCharacter
    multiplicity: int
    even: int
    odd: int

    @property
    def parities(self) -> Tuple[int, ...]:
        return (0,) * self.even + (1,) * self.odd


def block_decompose(
    data: SuperRootData, G: WeylGroup, flag: GradedVermaFlag
) -> Dict[CentralCharacter, GradedVermaFlag]:
    """
    Split a flag by the central character of its entries

    Entries of a g0 flag are grouped by g0_char_of, those of a g flag by
    g_char_of. Blocks are ordered by representative, greatest first.
    """
    parts: Dict[CentralCharacter, Dict[FlagEntry, int]] = {}
    for entry, multiplicity in flag.items():
        chi = char_of(data, G, flag.ambient, entry.weight)
        bucket = parts.setdefault(chi, {})
        bucket[entry] = bucket.get(entry, 0) + multiplicity

    ordered = sorted(parts, key=lambda chi: chi.rep.coords, reverse=True)
    logger.debug("Flag decomposed", entries=len(flag), blocks=len(ordered))
    return {chi: GradedVermaFlag(flag.ambient, parts[chi]) for chi in ordered}


def block_of(
    data: SuperRootData, G: WeylGroup, flag: GradedVermaFlag, chi: CentralCharacter
) -> GradedVermaFlag:
    """The chi block of flag, empty when chi is not in its support"""
    return block_decompose(data, G, flag).get(chi, GradedVermaFlag.empty(flag.ambient))


def support_report(data: SuperRootData, G: WeylGroup, lam: Weight) -> list[SupportEntry]:
    """
    Multiplicity of each g0 central character in the restriction flag of M~(lambda)

    Raises:
        FamilyError: If data is not of type B(0,n)
    """
    require_b0n(data, "support_report")
    blocks = block_decompose(data, G, restriction_flag(data, lam))
    report = []
    for chi, block in blocks.items():
        even, odd = block.parity_counts()
        report.append(SupportEntry(character=chi, multiplicity=len(block), even=even, odd=odd))
    return report


def block_multiplicity(data: SuperRootData, G: WeylGroup, lam: Weight, chi: CentralCharacter) -> int:
    return len(block_of(data, G, restriction_flag(data, lam), chi))
