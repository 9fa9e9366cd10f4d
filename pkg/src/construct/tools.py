"""Construction tools for FastMCP server."""

from typing import Any, Dict, List, Union

from conditions.report import verify_report
from construct.io import parse_minimal_input
from construct.iterated import parallel_iterated
from construct.minimal import construct_minimal
from tableau.io import tableau_document
from utils.helpers import format_tool_response, fraction_text


def minimal_payload(document: Union[str, Dict[str, Any]]) -> Dict[str, Any]:
    """Constructed tableau, L, beta and a verification summary."""
    result = construct_minimal(parse_minimal_input(document))
    report = verify_report(result.tableau)
    return {
        "tableau": tableau_document(result.tableau),
        "L": [[fraction_text(v) for v in row] for row in result.L.tolist()],
        "beta": [fraction_text(v) for v in result.beta],
        "verification": report,
    }


def iterated_payload(p: int, abscissae: List[str]) -> Dict[str, Any]:
    tableau = parallel_iterated(p, abscissae)
    return {"tableau": tableau_document(tableau), "verification": verify_report(tableau)}


def register_construction_tools(mcp_server) -> None:
    """
    Register method construction tools with the MCP server.

    Args:
        mcp_server: FastMCP server instance
    """

    @mcp_server.tool
    def construct_minimal_method(spec: Dict[str, Any]) -> Dict[str, Any]:
        """
        Build a minimal-stage (s, p, q) method with s = p + q - 1.

        Args:
            spec: {"A22": [[...]], "A33": [[...]], "c": [...], "p": p, "q": q};
                entries are rational strings such as "1/2"

        Returns:
            dict: tableau document, Sylvester solution L, weight parameters beta
                and the verification report of the result

        Raises:
            ValidationError: If the free parameters are inconsistent
            SingularSystemError: If the quadrature system is singular
        """
        return format_tool_response(minimal_payload(spec), "construct_minimal_method")

    @mcp_server.tool
    def construct_iterated_method(p: int, abscissae: List[str]) -> Dict[str, Any]:
        """
        Build the (p^2, p, p) parallel-iterated method from p + 1 distinct abscissae.

        Args:
            p: Target order and weak stage order (>= 2)
            abscissae: p + 1 distinct rationals in text form

        Returns:
            dict: tableau document and its verification report
        """
        return format_tool_response(iterated_payload(p, abscissae), "construct_iterated_method")
