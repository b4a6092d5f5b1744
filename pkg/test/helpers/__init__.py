"""Test helper utilities

Provides reusable test utilities for flag factories and custom assertions.
"""

from .factories import FlagBuilder, shifted, w
from .assertions import (
    assert_error_payload,
    assert_flag_equal,
    assert_single_verma,
    assert_valid_json_output,
    assert_weights,
)

__all__ = [
    # Factories
    "FlagBuilder",
    "shifted",
    "w",
    # Assertions
    "assert_error_payload",
    "assert_flag_equal",
    "assert_single_verma",
    "assert_valid_json_output",
    "assert_weights",
]
