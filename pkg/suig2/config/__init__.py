"""Configuration module for suig2."""

from suig2.config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings"]
