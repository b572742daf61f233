"""Configuration settings for the dlcoh engine."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings, read from ``DLCOH_*`` environment variables or ``.env``."""

    model_config = SettingsConfigDict(
        env_prefix="DLCOH_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "dlcoh"
    version: str = "0.1.0"

    # Search and enumeration bounds
    weyl_bound: int = Field(default=7, ge=1, description="Largest n for brute-force S_n work")
    coset_bound: int = Field(default=100_000, ge=1, description="Largest coset space enumerated")
    rewrite_budget: int = Field(default=100_000, ge=1, description="Step budget of word reduction")

    # Randomized checks
    seed: int = Field(default=0, description="Seed for randomized property checks")

    # Logging
    log_level: str = Field(default="INFO")
    log_json: bool = Field(default=False)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
