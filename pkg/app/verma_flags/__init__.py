from app.verma_flags.blocks import (
    SupportEntry,
    block_decompose,
    block_multiplicity,
    block_of,
    support_report,
)
from app.verma_flags.flags import induction_flag, restriction_flag, verma_flag
from app.verma_flags.gamma import gamma_parity, gamma_sets, is_in_gamma, sigma
from app.verma_flags.models import FlagEntry, GammaSet, GradedVermaFlag, flag_union

__all__ = [
    "GammaSet",
    "FlagEntry",
    "GradedVermaFlag",
    "flag_union",
    "gamma_sets",
    "gamma_parity",
    "is_in_gamma",
    "sigma",
    "verma_flag",
    "restriction_flag",
    "induction_flag",
    "SupportEntry",
    "block_decompose",
    "block_of",
    "block_multiplicity",
    "support_report",
]
