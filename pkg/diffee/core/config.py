from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator


class Settings(BaseSettings):
    """Application settings"""

    # Project Info
    PROJECT_NAME: str = "DIFFEE"
    VERSION: str = "0.1.0"

    # Logging Settings
    LOG_LEVEL: str = Field("INFO", validation_alias="DIFFEE_LOG_LEVEL")
    LOG_FORMAT: str = Field(
        "%(asctime)s %(levelname)s %(name)s: %(message)s",
        validation_alias="DIFFEE_LOG_FORMAT",
    )

    # Output Settings
    OUTPUT_DIR: str = Field("results", validation_alias="DIFFEE_OUTPUT_DIR")

    # Cells run concurrently across this many workers; never inside a timed fit
    JOBS: int = Field(1, ge=1, validation_alias="DIFFEE_JOBS")

    @field_validator("LOG_LEVEL", mode="after")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept lower-case level names from .env files"""
        level = v.strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v!r}")
        return level

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="allow",
        populate_by_name=True,
    )


settings = Settings()
