"""Application settings using Pydantic BaseSettings."""
from __future__ import annotations

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from TYPEGRAPH_* environment variables or a .env file."""

    model_config = SettingsConfigDict(
        env_prefix="TYPEGRAPH_",
        env_file=".env",
        env_file_encoding="utf-8",
        validate_assignment=True,
        extra="ignore",
    )

    # Logging
    debug: bool = Field(default=False, description="Verbose logging")
    log_level: str = Field(default="WARNING", description="Console level when not in debug mode")
    log_dir: Path | None = Field(default=None, description="Directory for rotating log files")

    # Exact search budgets
    budget_nodes: int = Field(default=5_000_000, ge=1, le=10**10)
    budget_ms: int = Field(default=60_000, ge=1, le=86_400_000)

    # Materialisation guards
    max_vertices: int = Field(default=20_000, ge=1, le=10**6)
    max_pairs: int = Field(default=100_000_000, ge=1, le=10**10)

    # Sampling
    seed: int = Field(default=0, ge=0)

    # dyadic helpers work on 64-bit words
    dyadic_max_n: int = Field(default=62, ge=1, le=62)

    # Type catalogues used by the table command and the acceptance suite
    catalogue: list[str] = Field(
        default_factory=lambda: [
            "12", "132", "1122", "1332", "13332", "11322",
            "111222", "112122", "113232", "113322", "131322",
        ],
        description="Irreducible types exercised by default",
    )
    reducible_catalogue: list[str] = Field(
        default_factory=lambda: ["1212", "12132", "312"],
    )


_settings: Settings | None = None


def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached instance so the next call re-reads the environment."""
    global _settings
    _settings = None
