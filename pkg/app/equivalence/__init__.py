from app.equivalence.context import BlockContext, BlockMode, build_context, context_from_weight
from app.equivalence.functors import (
    CorrespondencePair,
    Direction,
    RoundTripReport,
    phi,
    pi,
    pi_prime,
    pi_prime_via_composition,
    psi,
    round_trip,
    verma_correspondence,
    weights_of_block,
)

__all__ = [
    "BlockMode",
    "BlockContext",
    "build_context",
    "context_from_weight",
    "Direction",
    "RoundTripReport",
    "CorrespondencePair",
    "psi",
    "phi",
    "pi",
    "pi_prime",
    "pi_prime_via_composition",
    "round_trip",
    "verma_correspondence",
    "weights_of_block",
]
