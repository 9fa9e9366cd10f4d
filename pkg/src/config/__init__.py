"""Configuration package initialization."""

from config.settings import WsoConfig, ConfigurationError

__all__ = ["WsoConfig", "ConfigurationError"]
