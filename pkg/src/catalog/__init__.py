"""Catalog package initialization."""

from catalog.data import ExpectedMetrics, MethodRecord, GAUSS4_NODES
from catalog.registry import CatalogEntry, get, all_entries, available_names, list_methods

__all__ = [
    "ExpectedMetrics",
    "MethodRecord",
    "GAUSS4_NODES",
    "CatalogEntry",
    "get",
    "all_entries",
    "available_names",
    "list_methods",
]
