"""Tests for argument normalisation and the parser layout"""

import pytest

from app.cli.parser import build_parser, normalize_argv
from app.cli.registry import list_commands


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["classify", "--weight", "-3/2,-1/2"], ["classify", "--weight=-3/2,-1/2"]),
        (["mate", "--lambda-plus-rho", "2,0"], ["mate", "--lambda-plus-rho", "2,0"]),
        (["mate", "--chi-weight", "-1/2,0", "--json"], ["mate", "--chi-weight=-1/2,0", "--json"]),
        (["classify", "--weight"], ["classify", "--weight"]),
        (["orbit", "--json", "-1"], ["orbit", "--json", "-1"]),
    ],
)
def test_normalize_argv(argv, expected):
    assert normalize_argv(argv) == expected


def test_every_command_has_a_subparser():
    parser = build_parser()
    for name in list_commands():
        argv = [name]
        if name not in ("families", "selftest"):
            argv.append("B(0,2)")
        if name not in ("families", "selftest", "roots"):
            argv.extend(["--weight", "0,0"])
        assert parser.parse_args(argv).command == name


def test_family_is_optional():
    args = build_parser().parse_args(normalize_argv(["classify", "--weight", "-1,0"]))
    assert args.family is None
    assert args.weight == "-1,0"


def test_common_options():
    args = build_parser().parse_args(
        ["roots", "B(0,3)", "--cap", "100", "--depth", "2", "--log-level", "DEBUG", "--json"]
    )
    assert (args.cap, args.depth, args.log_level, args.json) == (100, 2, "DEBUG", True)
