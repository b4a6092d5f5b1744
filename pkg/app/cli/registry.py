from typing import Dict

from app.cli.base import Command
from app.cli.commands import (
    BlocksCommand,
    ClassifyCommand,
    EquivCommand,
    FamiliesCommand,
    FlagCommand,
    MateCommand,
    OrbitCommand,
    RootsCommand,
    VerifyPerfectCommand,
)
from app.cli.selftest import SelftestCommand
from app.exceptions import RegistryError

# Registry of available subcommands
_COMMANDS: Dict[str, Command] = {
    "families": FamiliesCommand(),
    "roots": RootsCommand(),
    "classify": ClassifyCommand(),
    "orbit": OrbitCommand(),
    "flag": FlagCommand(),
    "blocks": BlocksCommand(),
    "mate": MateCommand(),
    "verify-perfect": VerifyPerfectCommand(),
    "equiv": EquivCommand(),
    "selftest": SelftestCommand(),
}

# Subcommands that take no family argument
FAMILYLESS = frozenset({"families", "selftest"})


def get_command(name: str) -> Command:
    """
    Get a subcommand by name

    Raises:
        RegistryError: If the subcommand is not found
    """
    command = _COMMANDS.get(name.lower() if name else "")
    if command is None:
        available = ", ".join(_COMMANDS.keys())
        raise RegistryError(f"Unknown command '{name}'. Available commands: {available}")
    return command


def register_command(name: str, command: Command) -> None:
    """Register a custom subcommand"""
    _COMMANDS[name.lower()] = command


def list_commands() -> list[str]:
    """Get a list of available subcommand names"""
    return list(_COMMANDS.keys())


def list_commands_with_descriptions() -> dict[str, str]:
    """
    Get all available subcommands with their descriptions.

    Returns:
        Dict mapping subcommand names to their descriptions
    """
    return {name: command.get_description() for name, command in _COMMANDS.items()}
