"""Configuration management using environment variables."""

import math
import os
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from src.spectral.errors import ConfigurationError

DEFAULT_TOLERANCE = 1e-8
DEFAULT_JOBS = 1


class Config:
    """Configuration loader with environment variable validation."""

    def __init__(self, env_file: str = ".env") -> None:
        """Initialize configuration.

        Args:
            env_file: Path to environment file (default: .env)
        """
        self.env_file = env_file
        self._load_env()

    def _load_env(self) -> None:
        """Load environment variables from .env file if it exists.

        A missing file is fine; stdout carries machine-readable records so
        nothing is printed here.
        """
        env_path = Path(self.env_file)
        if env_path.exists():
            load_dotenv(env_path)

    def get(self, key: str, default: Any = None, required: bool = False) -> Any:
        """Get configuration value from environment.

        Args:
            key: Environment variable name
            default: Default value if not found
            required: Raise error if not found and no default

        Returns:
            Configuration value

        Raises:
            ValueError: If required config is missing
        """
        value = os.getenv(key, default)

        if required and value is None:
            raise ValueError(f"Required configuration '{key}' not found in environment")

        return value

    @property
    def environment(self) -> str:
        """Get current environment (development/testing/production)."""
        return self.get("ENVIRONMENT", "development")

    @property
    def log_level(self) -> str:
        """Get logging level."""
        return self.get("LOG_LEVEL", "INFO")

    @property
    def tolerance(self) -> float:
        """Relative tolerance for closed-form vs oracle comparisons (UACG_TOL).

        Raises:
            ConfigurationError: If the value is not a finite positive real
        """
        raw = self.get("UACG_TOL")
        if raw is None or raw == "":
            return DEFAULT_TOLERANCE
        try:
            value = float(raw)
        except ValueError as e:
            raise ConfigurationError(f"UACG_TOL must be a real number, got {raw!r}") from e
        if not math.isfinite(value) or value <= 0:
            raise ConfigurationError(f"UACG_TOL must be finite and positive, got {raw!r}")
        return value

    @property
    def jobs(self) -> int:
        """Parallelism degree cap for scans (UACG_JOBS).

        Raises:
            ConfigurationError: If the value is not a positive integer
        """
        raw = self.get("UACG_JOBS")
        if raw is None or raw == "":
            return DEFAULT_JOBS
        try:
            value = int(raw)
        except ValueError as e:
            raise ConfigurationError(f"UACG_JOBS must be an integer, got {raw!r}") from e
        if value < 1:
            raise ConfigurationError(f"UACG_JOBS must be positive, got {raw!r}")
        return value


# Global config instance
config = Config()
