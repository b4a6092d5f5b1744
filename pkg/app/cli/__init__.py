from app.cli.base import Command
from app.cli.parser import build_parser, normalize_argv
from app.cli.registry import (
    get_command,
    list_commands,
    list_commands_with_descriptions,
    register_command,
)
from app.cli.runner import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE, run
from app.cli.selftest import run_checks

__all__ = [
    "Command",
    "build_parser",
    "normalize_argv",
    "get_command",
    "register_command",
    "list_commands",
    "list_commands_with_descriptions",
    "run",
    "run_checks",
    "EXIT_OK",
    "EXIT_DOMAIN_ERROR",
    "EXIT_USAGE",
]
