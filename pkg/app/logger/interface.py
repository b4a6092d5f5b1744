from abc import ABC, abstractmethod
from typing import Any


class Logger(ABC):
    """Abstract logging interface with structured keyword context"""

    @abstractmethod
    def get_session_id(self) -> str:
        """Get the current session ID"""
        pass

    @abstractmethod
    def debug(self, message: str, **kwargs: Any) -> None:
        pass

    @abstractmethod
    def info(self, message: str, **kwargs: Any) -> None:
        pass

    @abstractmethod
    def warning(self, message: str, **kwargs: Any) -> None:
        pass

    @abstractmethod
    def error(self, message: str, **kwargs: Any) -> None:
        pass

    @abstractmethod
    def critical(self, message: str, **kwargs: Any) -> None:
        pass
