import argparse
from typing import Sequence

from app.cli.registry import FAMILYLESS, get_command, list_commands

# Options whose values may start with "-" (negative rationals)
VALUE_OPTIONS = ("--weight", "--lambda-plus-rho", "--chi-weight")


def normalize_argv(argv: Sequence[str]) -> list[str]:
    """
    Join "--weight -3/2,-1/2" into "--weight=-3/2,-1/2"

    argparse would otherwise read a negative rational as an option.
    """
    result: list[str] = []
    tokens = list(argv)
    index = 0
    while index < len(tokens):
        token = tokens[index]
        if token in VALUE_OPTIONS and index + 1 < len(tokens) and tokens[index + 1].startswith("-"):
            result.append(f"{token}={tokens[index + 1]}")
            index += 2
            continue
        result.append(token)
        index += 1
    return result


def _common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="Print the result as JSON")
    parent.add_argument("--verbose", action="store_true", help="Include per-element detail")
    parent.add_argument("--depth", type=int, default=None, help="Truncation depth (default: 4)")
    parent.add_argument("--cap", type=int, default=None, help="Weyl group order cap (default: 10^6)")
    parent.add_argument("--threads", type=int, default=None, help="Worker threads for verify-perfect")
    parent.add_argument("--config", type=str, default=None, help="Path to a supertypical.toml")
    parent.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Logging level, written to stderr (default: WARNING)",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supertypical",
        description="Central-character combinatorics for osp(1,2l) and related Lie superalgebras",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    parent = _common_parent()
    for name in list_commands():
        command = get_command(name)
        sub = subparsers.add_parser(
            name, parents=[parent], help=command.get_description(), description=command.get_description()
        )
        if name not in FAMILYLESS:
            sub.add_argument(
                "family",
                nargs="?",
                default=None,
                help="Family, e.g. B(0,2), osp(1,4), gl(1,1), B(1,1) (default: from settings)",
            )
        command.add_arguments(sub)
    return parser
