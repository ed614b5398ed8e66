"""Application settings configuration."""

from pathlib import Path
from typing import Optional

from pydantic import Field, computed_field
from pydantic_settings import BaseSettings

APP_VERSION = "1.0.0"

CONFIG_DIR = Path(__file__).resolve().parent


class Settings(BaseSettings):
    """Process settings with automatic environment variable loading."""

    class Config:
        """Pydantic configuration for Settings."""

        env_file = ".env"
        case_sensitive = False
        extra = "ignore"  # Allow extra environment variables

    # Basic application settings
    app_env: str = Field(default="development", alias="APP_ENV")
    log_level: Optional[str] = Field(default=None, alias="LOG_LEVEL")

    # Analysis defaults
    default_base_year: int = Field(default=2000, alias="DEFAULT_BASE_YEAR")
    report_significant_digits: int = Field(default=12, ge=3, le=17, alias="REPORT_SIGNIFICANT_DIGITS")
    data_dir: str = Field(default="data/uk", alias="DATA_DIR")

    @computed_field
    @property
    def tool_version(self) -> str:
        return APP_VERSION

    @property
    def default_config_path(self) -> Path:
        """Bundled UK analysis config."""
        return CONFIG_DIR / "analysis.yml"


# Global settings instance - loaded once, used everywhere
settings = Settings()
