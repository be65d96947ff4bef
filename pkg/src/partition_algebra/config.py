"""Configuration management for partition-algebra.

Settings come from defaults, optionally overridden by a YAML file given with
``--config``; nothing is read from the environment.
"""

from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from .exactratio import RatFunc, rf_parse
from .utils.exceptions import BoundExceededError, ConfigError, DivisionByZeroError, ParseError


class Config(BaseModel):
    """Run configuration."""

    max_strands: int = Field(
        default=4, ge=1, description="Largest n for exhaustive enumeration from the CLI"
    )
    enumerate_bound: int = Field(
        default=5, ge=1, description="Hard limit on n for enumeration with --unsafe-bounds"
    )
    max_level: int = Field(default=3, ge=1, description="Largest level for representations")
    c: str = Field(default="1", description="Off-diagonal scale of the two-path S blocks")
    seed: int = Field(default=0, description="Seed for every randomized sweep")
    q0: int = Field(default=101, description="Specialization point for rank computations")
    sample_size: int = Field(default=500, ge=0, description="Random diagrams per round-trip sweep")
    unsafe_bounds: bool = Field(default=False, description="Lift the default size bounds")

    @field_validator("c", mode="before")
    @classmethod
    def validate_c(cls, v: Any) -> str:
        """Ensure c parses to a nonzero rational function."""
        v = str(v)
        try:
            value = rf_parse(v)
        except (ParseError, DivisionByZeroError) as e:
            raise ValueError(f"c must be a rational function of Q: {e}") from e
        if value.is_zero():
            raise ValueError("c must be nonzero")
        return v

    @property
    def c_value(self) -> RatFunc:
        return rf_parse(self.c)

    def check_strands(self, n: int) -> None:
        """Raise BoundExceededError if n is above the enumeration bound in force."""
        bound = self.enumerate_bound if self.unsafe_bounds else self.max_strands
        if n > bound:
            hint = "" if self.unsafe_bounds else " (use --unsafe-bounds to raise it)"
            raise BoundExceededError(f"n={n} exceeds the bound {bound}{hint}")

    @property
    def level_bound(self) -> int:
        return self.max_level + 1 if self.unsafe_bounds else self.max_level

    def with_overrides(self, **overrides: Any) -> "Config":
        """Copy with every non-None override applied."""
        changes: Dict[str, Any] = {k: v for k, v in overrides.items() if v is not None}
        try:
            return self.model_validate({**self.model_dump(), **changes})
        except ValidationError as e:
            raise ConfigError(f"Invalid option values: {e}") from e

    @classmethod
    def load_from_file(cls, config_path: Path) -> "Config":
        """Load configuration from a YAML file.

        Args:
            config_path: Path to configuration file

        Returns:
            Config object

        Raises:
            ConfigError: If config file is invalid
        """
        if not config_path.exists():
            raise ConfigError(f"Config file not found: {config_path}")

        try:
            with open(config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)

            if data is None:
                data = {}
            if not isinstance(data, dict):
                raise ConfigError(f"Config file must hold a mapping: {config_path}")

            return cls(**data)
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in config file: {e}") from e
        except ValidationError as e:
            raise ConfigError(f"Invalid config values: {e}") from e
