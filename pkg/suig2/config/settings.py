"""
Application settings using Pydantic Settings.

Supports loading from SUIG2_* environment variables and .env files.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from suig2.core.exceptions import ParseError
from suig2.geometry.rationals import parse_rational


class Settings(BaseSettings):
    """
    Application settings with validation.

    All settings can be overridden via environment variables.
    """

    model_config = SettingsConfigDict(
        env_prefix="SUIG2_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    app_name: str = Field(default="suig2", description="Application name")
    debug: bool = Field(default=False, description="Enable debug logging")
    log_level: str = Field(default="warning", description="Log level when debug is off")

    # Geometry
    epsilon: str = Field(default="1/2", description="Stab gap parameter, rational in (0,1)")
    claw_constant: str = Field(
        default="1/4",
        description="Shrinked-path constant c, rational in (0, 1/2)",
    )

    # Recognizer
    verify_accepts: bool = Field(default=True, description="Re-verify every accepted representation")
    solver_node_budget: int = Field(
        default=4096,
        ge=1,
        le=1_000_000,
        description="Branching nodes allowed when realizing one stage candidate",
    )

    # Oracle
    oracle_max_n: int = Field(default=9, ge=1, le=12, description="Largest instance the oracle searches")
    oracle_time_budget: Optional[float] = Field(
        default=None,
        gt=0,
        description="Seconds allowed per oracle search (unbounded when unset)",
    )

    # Random fuzzing
    random_seed: int = Field(default=7, description="Seed for random tree generation")
    random_count: int = Field(default=1000, ge=0)
    random_size: int = Field(default=40, ge=1, le=10_000)

    @field_validator("epsilon")
    @classmethod
    def validate_epsilon(cls, v: str) -> str:
        """Ensure epsilon is a rational strictly between 0 and 1."""
        value = _rational_or_value_error(v)
        if not 0 < value < 1:
            raise ValueError("epsilon must lie strictly between 0 and 1")
        return v.strip()

    @field_validator("claw_constant")
    @classmethod
    def validate_claw_constant(cls, v: str) -> str:
        """Ensure c is a rational strictly between 0 and 1/2."""
        value = _rational_or_value_error(v)
        if not 0 < value < Fraction(1, 2):
            raise ValueError("claw_constant must lie strictly between 0 and 1/2")
        return v.strip()

    @property
    def epsilon_value(self) -> Fraction:
        return parse_rational(self.epsilon)

    @property
    def claw_constant_value(self) -> Fraction:
        return parse_rational(self.claw_constant)


def _rational_or_value_error(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as e:
        raise ValueError(e.message)


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Call `get_settings.cache_clear()` to reload.

    Returns:
        Settings: The application settings.

    Raises:
        ValidationError: If settings are invalid.
    """
    return Settings()
