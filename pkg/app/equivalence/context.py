"""Block contexts: a g block chi~ paired with a g0 block chi"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from app.core_math.weights import Ambient, Weight
from app.exceptions import AmbientMismatchError, BlockModeError, NotGenericError
from app.logger import get_logger
from app.root_systems.models import SuperRootData
from app.root_systems.operations import require_b0n
from app.weyl.group import WeylGroup
from app.central_chars.characters import g0_char_of, g_char_of
from app.central_chars.evaluation import classify
from app.central_chars.models import CentralCharacter, TypicalityKind
from app.mates.construction import construct_mate
from app.mates.verification import candidate_mates_strong, induction_overlaps, verify_mate

logger = get_logger("equivalence")


class BlockMode(str, Enum):
    STRONGLY_TYPICAL = "StronglyTypical"
    OSP_WEAK_GENERIC = "OspWeakGeneric"


@dataclass(frozen=True)
class BlockContext:
    data: SuperRootData
    G: WeylGroup
    chi_tilde: CentralCharacter
    chi: CentralCharacter
    mode: BlockMode

    @property
    def is_weak(self) -> bool:
        return self.mode is BlockMode.OSP_WEAK_GENERIC


def _detect_mode(data: SuperRootData, chi_tilde: CentralCharacter) -> BlockMode:
    classification = classify(data, chi_tilde.weight())
    if classification.kind is TypicalityKind.STRONGLY_TYPICAL:
        return BlockMode.STRONGLY_TYPICAL
    if classification.generic_weakly_atypical:
        return BlockMode.OSP_WEAK_GENERIC
    raise NotGenericError(
        f"{chi_tilde} is neither strongly typical nor generic weakly atypical",
        details={
            "rep": chi_tilde.rep.to_json(),
            "vanishing_roots": [b.to_json() for b in classification.vanishing_odd_roots],
        },
    )


def build_context(
    data: SuperRootData,
    G: WeylGroup,
    chi_tilde: CentralCharacter,
    chi: Optional[CentralCharacter] = None,
    mode: Optional[BlockMode] = None,
) -> BlockContext:
    """
    Pair chi_tilde with a g0 character chi and validate the pairing

    The mode is detected from chi_tilde. Without chi, the weakly atypical
    mode uses the constructed mate and the strongly typical mode uses the
    character of M(lambda) for the dot-maximal lambda. A strongly typical chi
    must be a candidate with no induction overlaps.

    Raises:
        FamilyError: If data is not of type B(0,n)
        NotGenericError: If chi_tilde fits neither mode
        BlockModeError: If mode disagrees with chi_tilde, or chi is not a mate
    """
    require_b0n(data, "block context")
    if chi_tilde.ambient is not Ambient.G:
        raise AmbientMismatchError(
            f"Expected a central character of g, got one of {chi_tilde.ambient.value}"
        )
    detected = _detect_mode(data, chi_tilde)
    if mode is not None and BlockMode(mode) is not detected:
        raise BlockModeError(
            f"{chi_tilde} is {detected.value}, not {BlockMode(mode).value}",
            details={"detected": detected.value},
        )

    if detected is BlockMode.STRONGLY_TYPICAL:
        candidates = candidate_mates_strong(data, G, chi_tilde)
        if chi is None:
            preferred = g0_char_of(data, G, chi_tilde.weight())
            ordered = [preferred] if preferred in candidates else []
            ordered += [c for c in candidates if c != preferred]
            chi = next(
                (c for c in ordered if not induction_overlaps(data, G, chi_tilde, c)), None
            )
            if chi is None:
                raise BlockModeError(
                    f"No candidate mate of {chi_tilde} induces back to single Verma modules",
                    details={"candidates": [c.key for c in candidates]},
                )
        elif chi not in candidates:
            raise BlockModeError(
                f"{chi} is not a candidate mate of {chi_tilde}",
                details={"candidates": [c.key for c in candidates]},
            )
        else:
            overlaps = induction_overlaps(data, G, chi_tilde, chi)
            if overlaps:
                raise BlockModeError(
                    f"{chi} is a candidate of {chi_tilde} but induction leaves the "
                    "single Verma modules",
                    details={"weights": [mu.to_json() for mu in overlaps]},
                )
    else:
        lam, constructed = construct_mate(data, G, chi_tilde)
        if chi is None:
            chi = constructed
        report = verify_mate(data, G, lam, chi)
        if not report.is_mate:
            raise BlockModeError(
                f"{chi} is not a mate of {chi_tilde}",
                details={"matched_gammas": [g.to_json() for g in report.matched_gammas]},
            )

    logger.debug("Block context built", chi_tilde=str(chi_tilde), chi=str(chi), mode=detected.value)
    return BlockContext(data=data, G=G, chi_tilde=chi_tilde, chi=chi, mode=detected)


def context_from_weight(
    data: SuperRootData,
    G: WeylGroup,
    lam: Weight,
    chi: Optional[CentralCharacter] = None,
    mode: Optional[BlockMode] = None,
) -> BlockContext:
    """build_context for the central character of M~(lambda)"""
    return build_context(data, G, g_char_of(data, G, lam), chi=chi, mode=mode)
