"""Tests for command-line input validation"""

import pytest

from app.exceptions import ValidationError
from app.validation import (
    InputValidator,
    family_from_text,
    require_valid,
    weight_from_text,
)


@pytest.fixture
def validator():
    """Create an input validator"""
    return InputValidator()


def test_valid_family(validator):
    """Test that supported spellings pass"""
    for text in ["B(0,2)", "osp(1,4)", "gl(2,1)", "B(1,1)"]:
        assert validator.validate_family(text).is_valid


def test_invalid_family_suggestions(validator):
    """Test that an unsupported family gets a single issue with suggestions"""
    result = validator.validate_family("D(2,1)")
    assert not result.is_valid
    assert len(result.errors) == 1
    issue = result.errors[0]
    assert issue.field == "family"
    assert issue.received_value == "D(2,1)"
    assert any("B0n" in s for s in issue.suggestions)


def test_weight_wrong_length(validator):
    result = validator.validate_weight("weight", "1,2,3", 2)
    assert not result.is_valid
    assert "Expected 2 coordinates, got 3" in result.errors[0].message


def test_weight_decimal(validator):
    result = validator.validate_weight("weight", "0.5,1", 2)
    assert not result.is_valid
    assert any("p/q" in s for s in result.errors[0].suggestions)


def test_weight_valid(validator):
    assert validator.validate_weight("weight", "1/2, -3/2", 2).is_valid


@pytest.mark.parametrize(
    "field, value, minimum, valid",
    [
        ("cap", None, 1, True),
        ("cap", 0, 1, False),
        ("threads", 4, 1, True),
        ("depth", 0, 0, True),
        ("depth", -1, 0, False),
        ("depth", 13, 0, False),
    ],
)
def test_validate_count(validator, field, value, minimum, valid):
    assert validator.validate_count(field, value, minimum).is_valid is valid


def test_depth_limit_is_configurable():
    assert InputValidator(max_depth=20).validate_count("depth", 13, 0).is_valid


def test_error_summary_and_json(validator):
    """Test the summary text and JSON form of a failed result"""
    result = validator.validate_weight("lambda-plus-rho", "1", 2)
    summary = result.get_error_summary()
    assert "1. lambda-plus-rho:" in summary
    assert "Suggestions:" in summary
    errors = result.get_json_errors()
    assert errors[0]["field"] == "lambda-plus-rho"
    assert errors[0]["received"] == "1"


def test_summary_without_errors(validator):
    assert validator.validate_weight("weight", "1,1", 2).get_error_summary() == "No errors"


def test_require_valid_raises_with_details(validator):
    with pytest.raises(ValidationError) as exc_info:
        require_valid(validator.validate_count("cap", 0, 1))
    assert exc_info.value.details["errors"][0]["field"] == "cap"


def test_family_from_text():
    spec = family_from_text("osp(1,6)")
    assert spec.label == "B(0,3)"
    with pytest.raises(ValidationError):
        family_from_text("sl(2)")


def test_weight_from_text(b02):
    weight = weight_from_text(b02, "weight", "1/2,-1/2")
    assert weight == b02.weight("1/2", "-1/2")
    with pytest.raises(ValidationError):
        weight_from_text(b02, "weight", "1/2")
