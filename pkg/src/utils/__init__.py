"""Utils package initialization."""

from utils.helpers import (
    setup_logging,
    format_tool_response,
    fraction_text,
    format_float17,
    parse_int_list,
    split_list,
    same_significant,
)

__all__ = [
    "setup_logging",
    "format_tool_response",
    "fraction_text",
    "format_float17",
    "parse_int_list",
    "split_list",
    "same_significant",
]
