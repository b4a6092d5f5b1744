"""Response models for command output

Every command returns one of these; `model_dump(mode="json")` is the
published JSON schema. Rationals are "p/q" strings, weights are lists of
them.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

WeightOut = List[str]


class ErrorResponse(BaseModel):
    error: str
    error_type: str
    details: Dict[str, Any] = {}


class FamilyInfo(BaseModel):
    name: str
    description: str
    examples: List[str]


class FamiliesResponse(BaseModel):
    families: List[FamilyInfo]


class CharacterOut(BaseModel):
    ambient: str = Field(description="g or g0")
    rep: WeightOut
    shift: WeightOut


class RootsResponse(BaseModel):
    family: str
    rank: int
    form: List[List[str]]
    delta0_plus: List[WeightOut]
    delta1_plus: List[WeightOut]
    delta1_plus_isotropic: List[WeightOut]
    simple_roots: List[WeightOut]
    even_simple_roots: List[WeightOut]
    rho: WeightOut
    rho0: WeightOut
    rho1: WeightOut
    weyl_order: int
    typicality_notions_coincide: bool


class VermaOut(BaseModel):
    projective: bool
    simple: bool
    orbit_size: int


class ClassifyResponse(BaseModel):
    family: str
    weight: WeightOut
    lambda_plus_rho: WeightOut
    kind: str
    vanishing_roots: List[WeightOut]
    generic: bool
    T_value: str
    Q_value: str
    central_character: CharacterOut
    verma: Optional[VermaOut] = None


class OrbitResponse(BaseModel):
    family: str
    weight: WeightOut
    action: str = Field(description="dot, dot0 (rho0-shifted) or linear")
    size: int
    orbit: List[WeightOut]
    canonical_rep: WeightOut
    stabilizer_order: int
    maximal: Optional[List[WeightOut]] = None
    minimal: Optional[List[WeightOut]] = None


class FlagEntryOut(BaseModel):
    weight: WeightOut
    parity: int
    multiplicity: int


class CharacterCheckOut(BaseModel):
    depth: int
    equal: bool
    weights_compared: int


class FlagResponse(BaseModel):
    family: str
    kind: str = Field(description="restriction or induction")
    weight: WeightOut
    base_parity: int
    ambient: str
    entries: List[FlagEntryOut]
    character_check: Optional[CharacterCheckOut] = None


class BlockOut(BaseModel):
    character: str
    rep: WeightOut
    multiplicity: int
    parities: List[int]
    entries: List[FlagEntryOut]


class BlocksResponse(BaseModel):
    family: str
    weight: WeightOut
    ambient: str
    total: int
    blocks: List[BlockOut]


class PerfectCheckOut(BaseModel):
    word: List[int]
    dot_weight: WeightOut
    pair: List[WeightOut]
    x_size: int
    disjoint: bool


class PerfectResponse(BaseModel):
    family: str
    weight: WeightOut
    chi: CharacterOut
    is_perfect: bool
    checked: int
    incl_rho0: bool
    incl_rho0_minus_sigma_l: bool
    failures: List[PerfectCheckOut]
    per_w: Optional[List[PerfectCheckOut]] = None


class MateResponse(BaseModel):
    family: str
    weight: WeightOut
    lambda_plus_rho: WeightOut
    chi_tilde: CharacterOut
    chi: CharacterOut
    matched_gammas: List[WeightOut]
    matched_parities: List[int]
    is_mate: bool
    graded_split: Optional[List[WeightOut]] = None
    orbit_consistent: bool
    is_perfect: bool
    perfect: PerfectResponse


class RoundTripOut(BaseModel):
    direction: str
    input: List[FlagEntryOut]
    forward: List[FlagEntryOut]
    back: List[FlagEntryOut]
    equal: bool


class PiPrimeOut(BaseModel):
    input: List[FlagEntryOut]
    output: List[FlagEntryOut]
    matches_composition: bool
    involution: bool


class EquivResponse(BaseModel):
    family: str
    mode: str
    chi_tilde: CharacterOut
    chi: CharacterOut
    note: str
    round_trips: List[RoundTripOut]
    all_equal: bool
    pi_prime: Optional[List[PiPrimeOut]] = None


class CheckOut(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SelftestResponse(BaseModel):
    passed: int
    failed: int
    checks: List[CheckOut]

    @property
    def ok(self) -> bool:
        return self.failed == 0
