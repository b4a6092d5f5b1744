"""Unified Application Settings

Typed configuration for supertypical with SUPERTYPICAL prefix.

Design principles:
- Single source of truth for all configuration
- Precedence: explicit override > environment > config file > defaults
- Type-safe settings with validation
- Optional flat key = value config file (supertypical.toml)
"""

import os

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional

from app.exceptions import ConfigurationError

ENV_PREFIX = "SUPERTYPICAL"
DEFAULT_CONFIG_FILE = "supertypical.toml"

DEFAULT_FAMILY = "B(0,2)"
DEFAULT_WEYL_CAP = 1_000_000
DEFAULT_DEPTH = 4
DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = "WARNING"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_int(prefix: str, name: str) -> Optional[int]:
    raw = os.environ.get(f"{prefix}_{name}")
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(
            f"Environment variable {prefix}_{name} must be an integer, got '{raw}'"
        )


@dataclass
class ComputeSettings:
    """Defaults for the computational commands"""

    default_family: str = DEFAULT_FAMILY
    weyl_cap: int = DEFAULT_WEYL_CAP
    depth: int = DEFAULT_DEPTH
    threads: int = DEFAULT_THREADS

    @classmethod
    def from_env(
        cls, prefix: str = ENV_PREFIX, base: Optional["ComputeSettings"] = None
    ) -> "ComputeSettings":
        """Load compute settings from environment, on top of an optional base"""
        settings = base if base is not None else cls()
        family = os.environ.get(f"{prefix}_FAMILY")
        cap = _env_int(prefix, "CAP")
        depth = _env_int(prefix, "DEPTH")
        threads = _env_int(prefix, "THREADS")
        return replace(
            settings,
            default_family=family or settings.default_family,
            weyl_cap=cap if cap is not None else settings.weyl_cap,
            depth=depth if depth is not None else settings.depth,
            threads=threads if threads is not None else settings.threads,
        )

    def validate(self) -> None:
        if self.weyl_cap < 1:
            raise ConfigurationError(f"Weyl cap must be positive, got {self.weyl_cap}")
        if self.depth < 0:
            raise ConfigurationError(f"Depth must be non-negative, got {self.depth}")
        if self.threads < 1:
            raise ConfigurationError(f"Threads must be at least 1, got {self.threads}")


@dataclass
class LogSettings:
    """Logging configuration"""

    level: str = DEFAULT_LOG_LEVEL

    @classmethod
    def from_env(
        cls, prefix: str = ENV_PREFIX, base: Optional["LogSettings"] = None
    ) -> "LogSettings":
        settings = base if base is not None else cls()
        level = os.environ.get(f"{prefix}_LOG_LEVEL")
        return replace(settings, level=(level or settings.level).upper())

    def validate(self) -> None:
        if self.level.upper() not in _LOG_LEVELS:
            raise ConfigurationError(
                f"Unknown log level '{self.level}'. Available levels: {', '.join(_LOG_LEVELS)}"
            )


@dataclass
class Settings:
    """Aggregate settings for supertypical"""

    compute: ComputeSettings = field(default_factory=ComputeSettings)
    log: LogSettings = field(default_factory=LogSettings)
    config_path: Optional[Path] = None

    @classmethod
    def from_file(cls, path: Path) -> "Settings":
        """
        Load settings from a flat key = value TOML file

        Recognised keys: family, cap, depth, threads, log_level

        Raises:
            ConfigurationError: If the file is unreadable or contains unknown keys
        """
        try:
            with open(path, "rb") as handle:
                raw: Dict[str, Any] = tomllib.load(handle)
        except OSError as e:
            raise ConfigurationError(f"Cannot read config file {path}: {e}")
        except tomllib.TOMLDecodeError as e:
            raise ConfigurationError(f"Invalid config file {path}: {e}")

        known = {"family", "cap", "depth", "threads", "log_level"}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ConfigurationError(
                f"Unknown config keys in {path}: {', '.join(unknown)}",
                details={"allowed": sorted(known)},
            )

        try:
            compute = ComputeSettings(
                default_family=str(raw.get("family", DEFAULT_FAMILY)),
                weyl_cap=int(raw.get("cap", DEFAULT_WEYL_CAP)),
                depth=int(raw.get("depth", DEFAULT_DEPTH)),
                threads=int(raw.get("threads", DEFAULT_THREADS)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Invalid value in config file {path}: {e}")
        log = LogSettings(level=str(raw.get("log_level", DEFAULT_LOG_LEVEL)).upper())
        return cls(compute=compute, log=log, config_path=Path(path))

    @classmethod
    def from_env(
        cls, prefix: str = ENV_PREFIX, config_path: Optional[Path] = None
    ) -> "Settings":
        """
        Build settings from the config file (if any) overlaid with environment

        The config file is taken from config_path, then {prefix}_CONFIG, then
        ./supertypical.toml when it exists.
        """
        path = config_path
        if path is None and os.environ.get(f"{prefix}_CONFIG"):
            path = Path(os.environ[f"{prefix}_CONFIG"])
        if path is None and Path(DEFAULT_CONFIG_FILE).is_file():
            path = Path(DEFAULT_CONFIG_FILE)

        base = cls.from_file(path) if path is not None else cls()
        return cls(
            compute=ComputeSettings.from_env(prefix, base.compute),
            log=LogSettings.from_env(prefix, base.log),
            config_path=base.config_path,
        )

    def validate(self) -> None:
        """Validate every settings group"""
        self.compute.validate()
        self.log.validate()


_settings: Optional[Settings] = None


def get_settings(reload: bool = False, config_path: Optional[Path] = None) -> Settings:
    """
    Get or create global settings instance

    Args:
        reload: If True, reload settings from file and environment
        config_path: Optional explicit config file

    Returns:
        Global Settings instance
    """
    global _settings
    if _settings is None or reload or config_path is not None:
        settings = Settings.from_env(config_path=config_path)
        settings.validate()
        _settings = settings
    return _settings


def reset_settings() -> None:
    """Drop the cached global settings (used by tests)"""
    global _settings
    _settings = None


__all__ = [
    "ComputeSettings",
    "LogSettings",
    "Settings",
    "get_settings",
    "reset_settings",
    "ENV_PREFIX",
    "DEFAULT_CONFIG_FILE",
    "DEFAULT_FAMILY",
    "DEFAULT_WEYL_CAP",
    "DEFAULT_DEPTH",
    "DEFAULT_THREADS",
    "DEFAULT_LOG_LEVEL",
]
