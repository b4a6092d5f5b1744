from app.validation.models import ValidationIssue, ValidationResult
from app.validation.validator import (
    InputValidator,
    family_from_text,
    require_valid,
    weight_from_text,
)

__all__ = [
    "ValidationIssue",
    "ValidationResult",
    "InputValidator",
    "require_valid",
    "family_from_text",
    "weight_from_text",
]
