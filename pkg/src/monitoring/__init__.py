"""Monitoring package initialization."""

from monitoring.health import register_monitoring_tools, catalog_health, check_entry

__all__ = ["register_monitoring_tools", "catalog_health", "check_entry"]
