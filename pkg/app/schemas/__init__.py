from app.schemas.models import (
    BlockOut,
    BlocksResponse,
    CharacterCheckOut,
    CharacterOut,
    CheckOut,
    ClassifyResponse,
    EquivResponse,
    ErrorResponse,
    FamiliesResponse,
    FamilyInfo,
    FlagEntryOut,
    FlagResponse,
    MateResponse,
    OrbitResponse,
    PerfectCheckOut,
    PerfectResponse,
    PiPrimeOut,
    RootsResponse,
    RoundTripOut,
    SelftestResponse,
    VermaOut,
)

__all__ = [
    "ErrorResponse",
    "FamilyInfo",
    "FamiliesResponse",
    "CharacterOut",
    "RootsResponse",
    "VermaOut",
    "ClassifyResponse",
    "OrbitResponse",
    "FlagEntryOut",
    "CharacterCheckOut",
    "FlagResponse",
    "BlockOut",
    "BlocksResponse",
    "PerfectCheckOut",
    "PerfectResponse",
    "MateResponse",
    "RoundTripOut",
    "PiPrimeOut",
    "EquivResponse",
    "CheckOut",
    "SelftestResponse",
]
