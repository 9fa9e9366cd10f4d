"""Custom exceptions for the WSO Runge-Kutta toolkit."""

from typing import List, Optional

from fastmcp.exceptions import ToolError


class WsoRKError(ToolError):
    """Base exception for all toolkit errors."""

    def __init__(self, message: str, operation: str = None):
        super().__init__(message)
        self.operation = operation


class ValidationError(WsoRKError):
    """Raised when input validation fails."""

    def __init__(self, message: str = "Input validation failed", field: str = None, **kwargs):
        super().__init__(message, **kwargs)
        self.field = field


class MalformedRationalError(ValidationError):
    """Raised when a textual rational cannot be parsed."""

    def __init__(self, text: str, **kwargs):
        super().__init__(f"Malformed rational literal: {text!r}", **kwargs)
        self.text = text


class DimensionMismatchError(WsoRKError):
    """Raised when matrix/vector shapes do not agree."""

    def __init__(self, message: str = "Dimension mismatch", **kwargs):
        super().__init__(message, **kwargs)


class SpectraOverlapError(WsoRKError):
    """Raised when a Sylvester equation has no unique solution."""

    def __init__(self, message: str = "Sylvester equation singular: spectra overlap", **kwargs):
        super().__init__(message, **kwargs)


class SingularSystemError(WsoRKError):
    """Raised when a construction step meets a singular linear system."""

    def __init__(self, message: str = "Linear system is singular", **kwargs):
        super().__init__(message, **kwargs)


class TableauStructureError(ValidationError):
    """Raised when a tableau violates explicitness or stage consistency."""

    def __init__(self, message: str = "Invalid tableau structure", **kwargs):
        super().__init__(message, **kwargs)


class UnknownMethodError(WsoRKError):
    """Raised when a catalog lookup fails."""

    def __init__(self, name: str, available: Optional[List[str]] = None, **kwargs):
        available = available or []
        message = f"Unknown method {name!r}. Available: {', '.join(available)}"
        super().__init__(message, **kwargs)
        self.name = name
        self.available = available


class CapExceededError(WsoRKError):
    """Raised when an exhaustive search bound is exceeded."""

    def __init__(self, message: str = "Search bound exceeded", cap: int = None, **kwargs):
        super().__init__(message, **kwargs)
        self.cap = cap


class BlowUpError(WsoRKError):
    """Raised when the integrated state becomes non-finite."""

    def __init__(self, t: float, grid: Optional[int] = None, **kwargs):
        message = f"blow-up at t={t!r}"
        if grid is not None:
            message += f" (grid N={grid})"
        super().__init__(message, **kwargs)
        self.t = t
        self.grid = grid
