"""Catalog tools for FastMCP server."""

from typing import Any, Dict

from catalog.registry import get, list_methods as catalog_rows
from tableau.io import tableau_document
from utils.helpers import format_tool_response


def register_catalog_tools(mcp_server) -> None:
    """
    Register catalog browsing tools with the MCP server.

    Args:
        mcp_server: FastMCP server instance
    """

    @mcp_server.tool
    def list_methods() -> Dict[str, Any]:
        """
        List every catalog method with its stages, order, weak stage order and error metrics.

        Returns:
            dict: one row per method (name, aliases, source, s, p, q, principal_error, D)
        """
        return format_tool_response(catalog_rows(), "list_methods")

    @mcp_server.tool
    def export_method(name: str) -> Dict[str, Any]:
        """
        Export a catalog method as a tableau document with exact rational entries.

        Args:
            name: Catalog name or alias, e.g. "(8,5,4)" or "dopri5"

        Returns:
            dict: {"name", "A", "b", "c", "claimed_order", "claimed_wso"}

        Raises:
            UnknownMethodError: If the name is not in the catalog
        """
        return format_tool_response(tableau_document(get(name).tableau), "export_method")
