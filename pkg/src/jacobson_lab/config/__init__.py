"""Configuration management for Jacobson Lab."""

from jacobson_lab.config.settings import (
    GraphSettings,
    OracleSettings,
    Settings,
    TheorySettings,
    get_settings,
)

__all__ = ["GraphSettings", "OracleSettings", "Settings", "TheorySettings", "get_settings"]
