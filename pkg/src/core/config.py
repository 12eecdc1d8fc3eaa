"""Configuration management using Pydantic Settings."""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Literal, Optional, Union

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Library and CLI settings.

    Values come from (lowest to highest priority) the defaults below, the
    flat ``KEY=value`` config file, and ``RTM_*`` environment variables.
    """

    model_config = SettingsConfigDict(
        env_prefix="RTM_",
        env_file="rtm.env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Resource caps
    max_degree: int = Field(8, ge=0, le=12, description="Largest forest degree accepted anywhere")
    max_word_length: int = Field(8, ge=0, le=14, description="Largest word length in sweeps")

    # Output
    output_format: Literal["text", "json"] = Field("text", description="CLI output format")
    report_timing: bool = Field(True, description="Record wall time in verification reports")

    # Numeric backstop
    numeric_terms: int = Field(96, ge=16, description="Series coefficients per factor at 1/2")
    tolerance: float = Field(1e-8, gt=0.0, description="Residual bound for numeric relations")
    truncation_cutoff: int = Field(2000, ge=10, description="Cutoff N of the direct-sum oracle")

    # Sweeps
    parallelism: int = Field(1, ge=1, le=64, description="Worker threads for verification sweeps")
    random_cases: int = Field(24, ge=0, description="Random spot checks at degree 5-6")
    random_seed: int = Field(20190806, description="Seed for random spot checks")

    # Logging
    log_level: str = Field("WARNING", description="Logging level")


def load_settings(config_file: Optional[Union[str, Path]] = None) -> Settings:
    """Build settings, optionally reading a specific config file."""
    if config_file is None:
        return Settings()
    return Settings(_env_file=str(config_file))


# Create singleton settings instance
settings = Settings()


@contextmanager
def use_settings(values: Settings) -> Iterator[Settings]:
    """Temporarily copy ``values`` into the shared ``settings`` instance."""
    saved = settings.model_dump()
    for name in Settings.model_fields:
        setattr(settings, name, getattr(values, name))
    try:
        yield settings
    finally:
        for name, value in saved.items():
            setattr(settings, name, value)
