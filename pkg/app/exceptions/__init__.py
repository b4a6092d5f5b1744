"""Custom exceptions for supertypical.

Every failure raised by the library derives from SupertypicalError so that
callers (the CLI in particular) can catch a single type and map it to an
exit code. Errors carry a human-readable message plus optional structured
details for JSON output.
"""

from typing import Any, Dict, Optional


class SupertypicalError(Exception):
    """Base exception for all supertypical errors"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Get the error in JSON-friendly format"""
        payload: Dict[str, Any] = {"error": self.message, "error_type": type(self).__name__}
        if self.details:
            payload["details"] = self.details
        return payload


class ValidationError(SupertypicalError):
    """Raised when user input cannot be parsed or is malformed"""

    pass


class ConfigurationError(SupertypicalError):
    """Raised when settings or the config file are invalid"""

    pass


class RegistryError(SupertypicalError):
    """Raised when a registry lookup fails (unknown family, unknown command)"""

    pass


class RankMismatchError(ValidationError):
    """Raised when weights of different rank or basis are combined"""

    def __init__(self, expected: Any, received: Any, what: str = "weight"):
        super().__init__(
            f"Rank mismatch for {what}: expected {expected}, got {received}",
            details={"expected": str(expected), "received": str(received)},
        )


class FamilyError(SupertypicalError):
    """Raised for invalid family parameters or an operation on the wrong family"""

    pass


class GroupOrderExceededError(SupertypicalError):
    """Raised when Weyl group generation exceeds the configured cap"""

    def __init__(self, cap: int):
        super().__init__(
            f"Weyl group order exceeds the configured cap of {cap}",
            details={"cap": cap},
        )
        self.cap = cap


class GammaError(ValidationError):
    """Raised when a weight is expected to be a 0/1 vector of the Gamma cube"""

    pass


class NotGenericError(SupertypicalError):
    """Raised when a central character fails a typicality/genericity precondition"""

    pass


class AmbientMismatchError(SupertypicalError):
    """Raised when flags or characters over g and g0 are mixed"""

    pass


class BlockMembershipError(SupertypicalError):
    """Raised when a functor receives a flag entry outside its block"""

    pass


class BlockModeError(SupertypicalError):
    """Raised when an operation is not defined for the block context mode"""

    pass


__all__ = [
    "SupertypicalError",
    "ValidationError",
    "ConfigurationError",
    "RegistryError",
    "RankMismatchError",
    "FamilyError",
    "GroupOrderExceededError",
    "GammaError",
    "NotGenericError",
    "AmbientMismatchError",
    "BlockMembershipError",
    "BlockModeError",
]
