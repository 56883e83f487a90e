"""
Configuration management for poset-scaffolds.

This module handles all configuration settings, loading from environment variables
and .env files with sensible defaults.
"""

from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings
from sympy import isprime


class Settings(BaseSettings):
    """Application configuration settings."""

    # Field configuration
    field_prime: int = Field(
        default=2147483647,
        description="Prime modulus of the coefficient field",
        ge=2,
        lt=2**31,
    )

    # Materialization of grid intervals
    materialize_cap: int = Field(
        default=200_000,
        description="Largest number of grid points an interval may be expanded into",
        ge=1,
    )

    # Invariant checking
    debug_checks: bool = Field(
        default=False,
        description="Run extra invariant checks (presection extension agreement, label checks)",
    )

    # Parallelism
    threads: int = Field(
        default=1,
        description="Worker threads for per-fiber module computations",
        ge=1,
    )

    # Benchmark output
    bench_dir: Path = Field(
        default=Path("./bench"),
        description="Directory for benchmark CSV output",
    )

    # Logging configuration
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="INFO",
        description="Logging level for the application",
    )

    @field_validator("field_prime")
    @classmethod
    def ensure_prime(cls, v: int) -> int:
        """Reject composite moduli."""
        if not isprime(v):
            raise ValueError(f"field modulus {v} is not prime")
        return v

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "env_prefix": "SCAFFOLDS_",
        "case_sensitive": False,
    }


# Global settings instance
settings = Settings()
