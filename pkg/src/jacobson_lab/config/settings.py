"""
Pydantic settings for Jacobson Lab.

Configuration is loaded from (in order of precedence):
1. Environment variables (JLAB_* prefix)
2. .env file in current directory
3. Default values defined here
"""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class GraphSettings(BaseSettings):
    """Settings for Jacobson graph construction."""

    model_config = SettingsConfigDict(
        env_prefix="JLAB_GRAPH_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    vertex_limit: int = Field(default=8192, gt=0, description="Largest graph build_graph accepts")


class OracleSettings(BaseSettings):
    """Settings for the exact-search oracles."""

    model_config = SettingsConfigDict(
        env_prefix="JLAB_ORACLE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    vertex_limit: int = Field(default=24, gt=0, description="Vertex limit for NP-hard searches")
    time_limit_ms: int = Field(default=60000, gt=0, description="Wall-clock budget per search")
    brute_force_vertex_limit: int = Field(
        default=16, gt=0, description="Vertex limit for the all-subsets induced search"
    )
    structure_vertex_limit: int = Field(
        default=1024, gt=0, description="Vertex limit for girth and diameter in reports"
    )


class TheorySettings(BaseSettings):
    """Settings for theorem evaluation and constructions."""

    model_config = SettingsConfigDict(
        env_prefix="JLAB_THEORY_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    lc_ordering: Literal["min", "max", "last"] = Field(
        default="min",
        description="Which residue field plays F_n in the induced-cycle formula",
    )
    construction_validate: bool = Field(
        default=True, description="Validate every construction against the built graph"
    )


class Settings(BaseSettings):
    """Main settings for Jacobson Lab."""

    model_config = SettingsConfigDict(
        env_prefix="JLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Paths
    output_dir: Path = Field(
        default=Path("./jlab_output"),
        description="Default directory for surveys and witness files",
    )

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")
    log_file: Path | None = Field(default=None, description="Optional log file path")

    # Nested settings
    graph: GraphSettings = Field(default_factory=GraphSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    theory: TheorySettings = Field(default_factory=TheorySettings)

    def ensure_directories(self) -> None:
        """Create the output directory if it doesn't exist."""
        self.output_dir.mkdir(parents=True, exist_ok=True)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
