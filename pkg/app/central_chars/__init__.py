from app.central_chars.characters import (
    char_of,
    extremal_weights,
    g0_char_of,
    g_char_of,
    verma_properties,
    weights_of_char,
)
from app.central_chars.evaluation import classify, eval_Q, eval_T
from app.central_chars.models import (
    CentralCharacter,
    Classification,
    TypicalityKind,
    VermaProperties,
)

__all__ = [
    "CentralCharacter",
    "Classification",
    "TypicalityKind",
    "VermaProperties",
    "eval_T",
    "eval_Q",
    "classify",
    "g_char_of",
    "g0_char_of",
    "char_of",
    "weights_of_char",
    "extremal_weights",
    "verma_properties",
]
