from typing import List, Optional

from app.core_math.rational import parse_rational_list
from app.core_math.weights import Weight
from app.exceptions import FamilyError, ValidationError
from app.root_systems import SuperRootData, list_families, parse_family
from app.root_systems.models import FamilySpec
from app.validation.models import ValidationIssue, ValidationResult


class InputValidator:
    """Validates command-line inputs with helpful error messages and suggestions"""

    def __init__(self, max_depth: int = 12):
        self.max_depth = max_depth

    def validate_family(self, text: str) -> ValidationResult:
        errors: List[ValidationIssue] = []
        try:
            parse_family(text)
        except (ValidationError, FamilyError) as e:
            errors.append(
                ValidationIssue(
                    field="family",
                    message=e.message,
                    received_value=text,
                    expected="B(m,n), osp(2m+1,2n) or gl(m,n)",
                    suggestions=[
                        "Use B(0,2) or osp(1,4) for the orthosymplectic family osp(1,4)",
                        "Use gl(1,1) or gl(2,1) for general linear superalgebras",
                        f"Registered families: {', '.join(list_families())}",
                    ],
                )
            )
        return ValidationResult(is_valid=not errors, errors=errors)

    def validate_weight(self, field: str, text: str, rank: int) -> ValidationResult:
        errors: List[ValidationIssue] = []
        try:
            values = parse_rational_list(text)
        except ValidationError as e:
            errors.append(
                ValidationIssue(
                    field=field,
                    message=e.message,
                    received_value=text,
                    expected=f"{rank} comma-separated exact rationals",
                    suggestions=[
                        "Write fractions as p/q, e.g. 1/2,-3/2",
                        "Decimals such as 0.5 are not accepted",
                    ],
                )
            )
            return ValidationResult(is_valid=False, errors=errors)

        if len(values) != rank:
            errors.append(
                ValidationIssue(
                    field=field,
                    message=f"Expected {rank} coordinates, got {len(values)}",
                    received_value=text,
                    expected=f"{rank} comma-separated exact rationals",
                    suggestions=[f"The family has rank {rank}; give one value per basis vector"],
                )
            )
        return ValidationResult(is_valid=not errors, errors=errors)

    def validate_count(self, field: str, value: Optional[int], minimum: int) -> ValidationResult:
        errors: List[ValidationIssue] = []
        if value is not None and value < minimum:
            errors.append(
                ValidationIssue(
                    field=field,
                    message=f"{field} must be at least {minimum}",
                    received_value=value,
                    expected=f"integer >= {minimum}",
                    suggestions=[f"Use --{field} {max(minimum, 1)} or omit it to use the default"],
                )
            )
        if field == "depth" and value is not None and value > self.max_depth:
            errors.append(
                ValidationIssue(
                    field=field,
                    message=f"depth {value} is above the supported maximum {self.max_depth}",
                    received_value=value,
                    expected=f"integer between 0 and {self.max_depth}",
                    suggestions=["Truncated characters grow quickly; depth 4 to 6 is usually enough"],
                )
            )
        return ValidationResult(is_valid=not errors, errors=errors)


def require_valid(result: ValidationResult) -> None:
    """Raise ValidationError carrying the summary when result is invalid"""
    if not result.is_valid:
        raise ValidationError(
            result.get_error_summary(), details={"errors": result.get_json_errors()}
        )


def family_from_text(text: str, validator: Optional[InputValidator] = None) -> FamilySpec:
    require_valid((validator or InputValidator()).validate_family(text))
    return parse_family(text)


def weight_from_text(
    data: SuperRootData, field: str, text: str, validator: Optional[InputValidator] = None
) -> Weight:
    require_valid((validator or InputValidator()).validate_weight(field, text, data.rank))
    return Weight.of(parse_rational_list(text), data.basis_tag)
