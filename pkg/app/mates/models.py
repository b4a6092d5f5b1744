from dataclasses import dataclass
from typing import Optional, Tuple

from app.core_math.weights import Weight
from app.central_chars.models import CentralCharacter


@dataclass(frozen=True)
class MateReport:
    """Which gamma put lambda - gamma in the block of chi

    is_mate holds iff the matched set is exactly {0, sigma_l} (parities 0
    and 1); graded_split is then (lambda, lambda - sigma_l).
    """

    lam: Weight
    chi: CentralCharacter
    matched_gammas: Tuple[Weight, ...]
    matched_parities: Tuple[int, ...]
    is_mate: bool
    graded_split: Optional[Tuple[Weight, Weight]]
    orbit_consistent: bool
    orbit_size: int


@dataclass(frozen=True)
class PerfectMateCheck:
    """Disjointness test for one group element w"""

    word: Tuple[int, ...]
    dot_weight: Weight
    pair: Tuple[Weight, Weight]
    x_size: int
    disjoint: bool


@dataclass(frozen=True)
class PerfectMateReport:
    lam: Weight
    chi: CentralCharacter
    per_w: Tuple[PerfectMateCheck, ...]
    incl_rho0: bool
    incl_rho0_minus_sigma_l: bool

    @property
    def stab_inclusions(self) -> Tuple[bool, bool]:
        return self.incl_rho0, self.incl_rho0_minus_sigma_l

    @property
    def is_perfect(self) -> bool:
        return all(check.disjoint for check in self.per_w) and all(self.stab_inclusions)

    @property
    def failures(self) -> Tuple[PerfectMateCheck, ...]:
        return tuple(check for check in self.per_w if not check.disjoint)
