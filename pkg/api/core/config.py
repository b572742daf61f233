"""Server settings for the dlcoh API."""

from functools import lru_cache
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class ApiSettings(BaseSettings):
    """HTTP server settings, read from ``DLCOH_API_*`` variables."""

    model_config = SettingsConfigDict(
        env_prefix="DLCOH_API_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "dlcoh API"
    version: str = "0.1.0"
    debug: bool = Field(default=False)

    # Server
    host: str = Field(default="127.0.0.1")
    port: int = Field(default=8000)
    allowed_hosts: List[str] = Field(default=["*"])

    # Logging
    log_level: str = Field(default="INFO")


@lru_cache(maxsize=1)
def get_api_settings() -> ApiSettings:
    return ApiSettings()


settings = get_api_settings()
