"""The functors Psi, Phi, Pi and Pi' on Verma flags

Psi restricts to g0 and keeps the chi block (and, for weakly atypical
blocks, the even part). Phi induces to g and keeps the chi~ block. Both
are additive, so they are computed entry by entry.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Tuple

from app.core_math.weights import Ambient, Weight
from app.exceptions import AmbientMismatchError, BlockMembershipError, BlockModeError
from app.central_chars.characters import g0_char_of, g_char_of, weights_of_char
from app.verma_flags.blocks import block_of
from app.verma_flags.flags import induction_flag, restriction_flag
from app.verma_flags.models import FlagEntry, GradedVermaFlag, flag_union
from app.equivalence.context import BlockContext


class Direction(str, Enum):
    PSI_PHI = "psi_phi"
    PHI_PSI = "phi_psi"


@dataclass(frozen=True)
class RoundTripReport:
    direction: Direction
    input: GradedVermaFlag
    forward: GradedVermaFlag
    back: GradedVermaFlag

    @property
    def equal(self) -> bool:
        return self.input == self.back


@dataclass(frozen=True)
class CorrespondencePair:
    """A g-Verma flag of the block and its image under Psi"""

    entry: FlagEntry
    image: GradedVermaFlag
    returns: bool

    @property
    def is_single_verma(self) -> bool:
        return len(self.image) == 1


def _require_ambient(flag: GradedVermaFlag, ambient: Ambient, functor: str) -> None:
    if flag.ambient is not ambient:
        raise AmbientMismatchError(
            f"{functor} expects a flag over {ambient.value}, got one over {flag.ambient.value}"
        )


def _expand(
    flag: GradedVermaFlag, ambient: Ambient, step: Callable[[FlagEntry], GradedVermaFlag]
) -> GradedVermaFlag:
    parts = []
    for entry, multiplicity in flag.items():
        image = step(entry)
        parts.extend([image] * multiplicity)
    return flag_union(parts, ambient)


def psi(ctx: BlockContext, flag: GradedVermaFlag) -> GradedVermaFlag:
    """
    g flag of the chi~ block -> g0 flag of the chi block

    Raises:
        AmbientMismatchError: If flag is not over g
        BlockMembershipError: If an entry is not in the chi~ block
    """
    _require_ambient(flag, Ambient.G, "psi")

    def step(entry: FlagEntry) -> GradedVermaFlag:
        if g_char_of(ctx.data, ctx.G, entry.weight) != ctx.chi_tilde:
            raise BlockMembershipError(
                f"M~{entry.weight} is not in the block {ctx.chi_tilde}",
                details={"weight": entry.weight.to_json()},
            )
        restricted = restriction_flag(ctx.data, entry.weight, base_parity=entry.parity)
        block = block_of(ctx.data, ctx.G, restricted, ctx.chi)
        return block.with_parity(0) if ctx.is_weak else block

    return _expand(flag, Ambient.G0, step)


def phi(ctx: BlockContext, flag: GradedVermaFlag) -> GradedVermaFlag:
    """
    g0 flag of the chi block -> g flag of the chi~ block

    Raises:
        AmbientMismatchError: If flag is not over g0
        BlockMembershipError: If an entry is not in the chi block
    """
    _require_ambient(flag, Ambient.G0, "phi")

    def step(entry: FlagEntry) -> GradedVermaFlag:
        if g0_char_of(ctx.data, ctx.G, entry.weight) != ctx.chi:
            raise BlockMembershipError(
                f"M{entry.weight} is not in the block {ctx.chi}",
                details={"weight": entry.weight.to_json()},
            )
        induced = induction_flag(ctx.data, entry.weight, base_parity=entry.parity)
        return block_of(ctx.data, ctx.G, induced, ctx.chi_tilde)

    return _expand(flag, Ambient.G, step)


def pi(flag: GradedVermaFlag) -> GradedVermaFlag:
    """Parity change"""
    return flag.flip()


def pi_prime(ctx: BlockContext, flag: GradedVermaFlag) -> GradedVermaFlag:
    """
    The odd part of the chi block of the restriction of Phi(N), made even

    Raises:
        BlockModeError: Outside the weakly atypical mode
    """
    if not ctx.is_weak:
        raise BlockModeError(
            f"pi_prime is only defined for weakly atypical blocks, got {ctx.mode.value}"
        )
    induced = phi(ctx, flag)

    def step(entry: FlagEntry) -> GradedVermaFlag:
        restricted = restriction_flag(ctx.data, entry.weight, base_parity=entry.parity)
        return block_of(ctx.data, ctx.G, restricted, ctx.chi).with_parity(1).flip()

    return _expand(induced, Ambient.G0, step)


def pi_prime_via_composition(ctx: BlockContext, flag: GradedVermaFlag) -> GradedVermaFlag:
    """Psi(Pi(Phi(N)))"""
    if not ctx.is_weak:
        raise BlockModeError(f"pi_prime is only defined for weakly atypical blocks, got {ctx.mode.value}")
    return psi(ctx, pi(phi(ctx, flag)))


def round_trip(ctx: BlockContext, flag: GradedVermaFlag, direction: Direction | str) -> RoundTripReport:
    """
    Apply Psi then Phi (psi_phi, on g flags) or Phi then Psi (phi_psi, on g0 flags)
    and compare with the input
    """
    direction = Direction(direction)
    if direction is Direction.PSI_PHI:
        forward = psi(ctx, flag)
        back = phi(ctx, forward)
    else:
        forward = phi(ctx, flag)
        back = psi(ctx, forward)
    return RoundTripReport(direction=direction, input=flag, forward=forward, back=back)


def verma_correspondence(ctx: BlockContext) -> Tuple[CorrespondencePair, ...]:
    """Psi on every single g-Verma flag of the block, both parities"""
    pairs = []
    for weight in weights_of_char(ctx.data, ctx.G, ctx.chi_tilde):
        for parity in (0, 1):
            source = GradedVermaFlag.single(Ambient.G, weight, parity)
            image = psi(ctx, source)
            pairs.append(
                CorrespondencePair(
                    entry=FlagEntry(weight, parity),
                    image=image,
                    returns=phi(ctx, image) == source,
                )
            )
    return tuple(pairs)


def weights_of_block(ctx: BlockContext) -> Tuple[Tuple[Weight, ...], Tuple[GradedVermaFlag, ...]]:
    """
    Highest weights of the g-Verma modules of the chi~ block, and the
    single-Verma g0 flags of the chi block reached from them by Psi
    """
    g_weights = weights_of_char(ctx.data, ctx.G, ctx.chi_tilde)
    seen: set[FlagEntry] = set()
    for pair in verma_correspondence(ctx):
        seen.update(pair.image)
    g0_flags = tuple(
        GradedVermaFlag.single(Ambient.G0, entry.weight, entry.parity)
        for entry in sorted(seen, key=FlagEntry.sort_key)
    )
    return g_weights, g0_flags
