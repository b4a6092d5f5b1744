import logging as python_logging
import sys
import uuid
from typing import Any, Optional, TextIO, Union

from app.logger.interface import Logger

ROOT_LOGGER_NAME = "supertypical"

# One session per process so that records from every module correlate
_PROCESS_SESSION_ID = str(uuid.uuid4())[:8]


def _coerce_level(level: Union[int, str]) -> int:
    if isinstance(level, int):
        return level
    resolved = python_logging.getLevelName(level.upper())
    if not isinstance(resolved, int):
        raise ValueError(f"Unknown log level '{level}'")
    return resolved


class ConsoleLogger(Logger):
    """
    Logger implementation using Python's built-in logging module.
    Logs to stderr with session tracking.

    Loggers named below "supertypical." do not install handlers of their own;
    they propagate to the root "supertypical" logger configured by the CLI.
    """

    def __init__(
        self,
        name: str = ROOT_LOGGER_NAME,
        level: Optional[Union[int, str]] = None,
        format_string: str = "%(asctime)s [%(levelname)s] [session:%(session_id)s] %(message)s",
        stream: Optional[TextIO] = None,
    ):
        """
        Initialize the console logger

        Args:
            name: Logger name
            level: Logging level (logging.DEBUG, "INFO", ...); None inherits from the parent
            format_string: Log format string (must include %(session_id)s)
            stream: Output stream for the root logger handler (default: stderr)
        """
        self._session_id = _PROCESS_SESSION_ID
        self._logger = python_logging.getLogger(name)

        if level is not None:
            self._logger.setLevel(_coerce_level(level))

        is_child = name.startswith(ROOT_LOGGER_NAME + ".")
        # Only add handler if none exist (avoid duplicate handlers)
        if not is_child and not self._logger.handlers:
            handler = python_logging.StreamHandler(stream or sys.stderr)
            handler.setFormatter(python_logging.Formatter(format_string))
            self._logger.addHandler(handler)
            self._logger.propagate = False
            if level is None:
                self._logger.setLevel(python_logging.WARNING)

    def get_session_id(self) -> str:
        """Get the current session ID"""
        return self._session_id

    def set_level(self, level: Union[int, str]) -> None:
        """Change the level of the underlying logger"""
        self._logger.setLevel(_coerce_level(level))

    def _format_extra(self, **kwargs: Any) -> str:
        """Format additional keyword arguments"""
        if not kwargs:
            return ""
        return " " + " ".join(f"{k}={v}" for k, v in kwargs.items())

    def _log(self, level: int, message: str, **kwargs: Any) -> None:
        if not self._logger.isEnabledFor(level):
            return
        self._logger.log(
            level, message + self._format_extra(**kwargs), extra={"session_id": self._session_id}
        )

    def debug(self, message: str, **kwargs: Any) -> None:
        """Log a debug message"""
        self._log(python_logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        """Log an info message"""
        self._log(python_logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        """Log a warning message"""
        self._log(python_logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        """Log an error message"""
        self._log(python_logging.ERROR, message, **kwargs)

    def critical(self, message: str, **kwargs: Any) -> None:
        """Log a critical message"""
        self._log(python_logging.CRITICAL, message, **kwargs)


def get_logger(component: str) -> ConsoleLogger:
    """Get a child logger of the supertypical root logger"""
    return ConsoleLogger(name=f"{ROOT_LOGGER_NAME}.{component}")


def configure_logging(
    level: Union[int, str] = "WARNING", stream: Optional[TextIO] = None
) -> ConsoleLogger:
    """
    Configure the root supertypical logger

    Args:
        level: Logging level for every supertypical component
        stream: Output stream (default: stderr, keeps stdout clean for --json)

    Returns:
        The root ConsoleLogger
    """
    root = python_logging.getLogger(ROOT_LOGGER_NAME)
    if stream is not None:
        for handler in list(root.handlers):
            root.removeHandler(handler)
    logger = ConsoleLogger(name=ROOT_LOGGER_NAME, level=level, stream=stream)
    logger.set_level(level)
    return logger
