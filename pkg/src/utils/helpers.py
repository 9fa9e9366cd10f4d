"""Utility functions shared by the CLI, the tool server and the library."""

import logging
import math
from fractions import Fraction
from typing import Dict, Any, Optional, List

from config.settings import WsoConfig


def setup_logging(
    level: str = "WARNING",
    format_string: Optional[str] = None,
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Set up logging configuration.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_string: Custom log format string
        log_file: Optional log file path (stderr when omitted)

    Returns:
        logging.Logger: Configured logger instance
    """
    log_format = format_string or WsoConfig.LOG_FORMAT

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=log_format,
        filename=log_file,
        filemode="a" if log_file else None
    )

    return logging.getLogger("wso-rk")


def format_tool_response(
    data: Any,
    tool_name: str,
    include_metadata: bool = True
) -> Dict[str, Any]:
    """
    Format a tool result with consistent structure.

    Args:
        data: Payload (already JSON-compatible)
        tool_name: Name of the tool that produced it
        include_metadata: Whether to include metadata in the response

    Returns:
        dict: Formatted response data
    """
    formatted_response = {
        "success": True,
        "data": data,
    }

    if include_metadata:
        formatted_response["metadata"] = {
            "tool": tool_name,
            "spec_version": WsoConfig.SPEC_VERSION,
        }

    return formatted_response


def fraction_text(value: Fraction) -> str:
    """Render a Fraction as 'p/q' (or 'p' when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float17(value: Optional[float]) -> str:
    """Deterministic 17-significant-digit rendering; blank for None."""
    if value is None:
        return ""
    if math.isnan(value):
        return "nan"
    return f"{value:.17g}"


def parse_int_list(text: str, field: str = "list") -> List[int]:
    """Parse '50,100,200' into [50, 100, 200]."""
    from core.exceptions import ValidationError

    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ValidationError(f"Empty {field}", field=field)
    try:
        return [int(item) for item in items]
    except ValueError:
        raise ValidationError(f"Expected comma-separated integers for {field}: {text!r}", field=field)


def split_list(text: str) -> List[str]:
    """Split a comma-separated argument, dropping blanks."""
    return [item.strip() for item in text.split(",") if item.strip()]


def same_significant(computed: float, expected: float, digits: int = 4) -> bool:
    """True when both values print identically with ``digits`` significant digits."""
    return f"{float(computed):.{digits - 1}e}" == f"{float(expected):.{digits - 1}e}"
