"""Verification tools for FastMCP server."""

from typing import Any, Dict, Optional, Union

from catalog import get
from conditions.report import verify_report
from tableau.io import parse_tableau
from utils.helpers import format_tool_response


def register_verification_tools(mcp_server) -> None:
    """
    Register tableau verification tools with the MCP server.

    Args:
        mcp_server: FastMCP server instance
    """

    @mcp_server.tool
    def verify_method(
        name_or_document: Union[str, Dict[str, Any]],
        max_order: Optional[int] = None,
        exact: bool = False,
    ) -> Dict[str, Any]:
        """
        Verify classical order, weak stage order and structural bounds of a method.

        Args:
            name_or_document: Catalog name/alias, or a tableau document {"A", "b", "c"}
            max_order: Highest classical order examined (configured cap when omitted)
            exact: Emit stability coefficients and D as rational text

        Returns:
            dict: order, wso, dim_Y, dim_K_q, stability_coeffs, principal_error, D,
                linear_ssp, nonneg, bounds and necessary_conditions

        Raises:
            UnknownMethodError: If a name is given that is not in the catalog
            ValidationError: If the document is malformed
        """
        if isinstance(name_or_document, dict):
            tableau = parse_tableau(name_or_document)
        else:
            tableau = get(name_or_document).tableau
        return format_tool_response(verify_report(tableau, max_order, exact), "verify_method")
