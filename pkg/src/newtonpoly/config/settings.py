"""
Configuration management for newtonpoly.
"""

from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import BaseModel, Field, validator

DEFAULT_SEED = 20240601


class EnumerationConfig(BaseModel):
    """Polygon enumeration settings."""

    n_jobs: int = Field(default=1, description="joblib workers for hull relaxation (-1 for all cores)")
    max_genus: int = Field(default=10, description="Largest genus the enumerators accept")
    show_progress: bool = Field(default=False, description="Report enumeration progress on stderr")

    @validator("n_jobs")
    def n_jobs_nonzero(cls, v):
        if v == 0:
            raise ValueError("n_jobs must be nonzero")
        return v

    @validator("max_genus")
    def max_genus_positive(cls, v):
        if v < 1:
            raise ValueError("max_genus must be at least 1")
        return v


class NondegeneracyConfig(BaseModel):
    """Polynomial checker settings."""

    max_prime: int = Field(default=1 << 16, description="Exclusive upper bound on the field characteristic")
    oracle_max_degree: int = Field(default=2, description="Largest extension degree the brute-force oracle searches")
    translation_requires_origin: bool = Field(
        default=False, description="Only accept translates with a nonzero constant term"
    )

    @validator("max_prime")
    def max_prime_above_two(cls, v):
        if v < 3:
            raise ValueError("max_prime must be at least 3")
        return v

    @validator("oracle_max_degree")
    def oracle_degree_positive(cls, v):
        if v < 1:
            raise ValueError("oracle_max_degree must be at least 1")
        return v


class OutputConfig(BaseModel):
    """Output formatting."""

    pretty: bool = Field(default=False, description="Indent JSON output")
    seed: int = Field(default=DEFAULT_SEED, description="Seed for randomized checks")


class NewtonPolyConfig(BaseModel):
    """Main configuration class for newtonpoly."""

    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)
    nondegeneracy: NondegeneracyConfig = Field(default_factory=NondegeneracyConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @classmethod
    def from_file(cls, config_path: Union[str, Path]) -> "NewtonPolyConfig":
        """Load configuration from a YAML file."""
        config_path = Path(config_path)
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with open(config_path, "r") as f:
            config_data = yaml.safe_load(f) or {}

        return cls(**config_data)

    @classmethod
    def load(cls, config_path: Optional[Union[str, Path]] = None) -> "NewtonPolyConfig":
        return cls.from_file(config_path) if config_path else cls()

    def save_to_file(self, config_path: Union[str, Path]) -> None:
        """Save configuration to a YAML file."""
        config_path = Path(config_path)
        config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(config_path, "w") as f:
            yaml.dump(self.dict(), f, default_flow_style=False, indent=2)
