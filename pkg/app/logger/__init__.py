"""
Logger module for supertypical

This module provides a flexible logging interface that allows users to
drop in their own logger implementations.

Usage:
    from app.logger import get_logger, configure_logging

    configure_logging("DEBUG")
    logger = get_logger("weyl")
    logger.debug("Group generated", order=48)

    # Or implement your own
    class MyCustomLogger(Logger):
        def info(self, message: str, **kwargs):
            # Your custom implementation
            pass
"""

from .interface import Logger
from .console_logger import ConsoleLogger, configure_logging, get_logger, ROOT_LOGGER_NAME

__all__ = [
    "Logger",
    "ConsoleLogger",
    "configure_logging",
    "get_logger",
    "ROOT_LOGGER_NAME",
]
