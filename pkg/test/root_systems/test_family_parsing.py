"""Tests for family-name parsing"""

import pytest

from app.exceptions import FamilyError, ValidationError
from app.root_systems import FamilyKind, FamilySpec, parse_family


@pytest.mark.parametrize(
    "text, expected",
    [
        ("B(0,2)", FamilySpec.b0n(2)),
        ("osp(1,4)", FamilySpec.b0n(2)),
        ("OSP(1, 6)", FamilySpec.b0n(3)),
        ("b(0,1)", FamilySpec.b0n(1)),
        ("gl(1,1)", FamilySpec.glmn(1, 1)),
        (" gl( 2 , 1 ) ", FamilySpec.glmn(2, 1)),
        ("B(1,1)", FamilySpec.bmn(1, 1)),
        ("osp(3,2)", FamilySpec.bmn(1, 1)),
        ("osp(5,4)", FamilySpec.bmn(2, 2)),
    ],
)
def test_parse_family(text, expected):
    assert parse_family(text) == expected


def test_b0_maps_to_b0n_family():
    assert parse_family("B(0,3)").family is FamilyKind.B0N


@pytest.mark.parametrize("text", ["", "A(1)", "osp(1;4)", "B(0)", "gl(1,1,1)", "B(-1,2)"])
def test_unrecognised(text):
    with pytest.raises(ValidationError, match="Unrecognised family"):
        parse_family(text)


@pytest.mark.parametrize(
    "text, message",
    [
        ("osp(2,4)", "type D or C"),
        ("osp(1,3)", "second parameter must be even"),
        ("B(0,0)", "requires n >= 1"),
        ("gl(0,2)", "requires m >= 1"),
    ],
)
def test_invalid_parameters(text, message):
    with pytest.raises(FamilyError, match=message):
        parse_family(text)
