"""Core package initialization."""

from core.server import create_server, initialize_server, register_all_tools
from core.exceptions import (
    WsoRKError,
    ValidationError,
    MalformedRationalError,
    DimensionMismatchError,
    SpectraOverlapError,
    SingularSystemError,
    TableauStructureError,
    UnknownMethodError,
    CapExceededError,
    BlowUpError
)

__all__ = [
    "create_server",
    "initialize_server",
    "register_all_tools",
    "WsoRKError",
    "ValidationError",
    "MalformedRationalError",
    "DimensionMismatchError",
    "SpectraOverlapError",
    "SingularSystemError",
    "TableauStructureError",
    "UnknownMethodError",
    "CapExceededError",
    "BlowUpError"
]
