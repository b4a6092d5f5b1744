import argparse
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

from pydantic import BaseModel

if TYPE_CHECKING:
    from app.cli.session import CommandSession


class Command(ABC):
    """Base class for CLI subcommands"""

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the subcommand's own arguments"""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace, session: "CommandSession") -> BaseModel:
        """Run the subcommand and return its response model"""
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Get a human-readable description of the subcommand"""
        pass

    def exit_code(self, response: BaseModel) -> int:
        """Exit status for a successful run"""
        return 0
