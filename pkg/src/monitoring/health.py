"""Catalog regression health check for FastMCP server."""

import logging
import time
from typing import Any, Dict

from catalog.registry import CatalogEntry, all_entries
from conditions.order import classical_order
from conditions.wso import wso
from utils.helpers import format_tool_response, same_significant

logger = logging.getLogger(__name__)


def check_entry(entry: CatalogEntry) -> Dict[str, Any]:
    """Recompute (s, p, q) and the error metrics of one entry and compare."""
    expected = entry.expected
    tableau = entry.tableau
    order = classical_order(tableau)
    analysis = wso(tableau, order=order.verified_order)
    q = None if analysis.infinite else analysis.q

    problems = []
    if tableau.s != expected.s:
        problems.append(f"s={tableau.s}, expected {expected.s}")
    if order.verified_order != expected.p:
        problems.append(f"p={order.verified_order}, expected {expected.p}")
    if q != expected.q:
        problems.append(f"q={q}, expected {expected.q}")
    if expected.principal_error is not None and order.principal_error is not None:
        if not same_significant(order.principal_error, expected.principal_error):
            problems.append(f"A^(p+1)={order.principal_error:.4e}, expected {expected.principal_error:.4e}")
    if expected.D is not None and not same_significant(order.D, expected.D, expected.D_digits):
        problems.append(f"D={float(order.D):.4g}, expected {expected.D:.4g}")

    return {
        "status": "healthy" if not problems else "unhealthy",
        "s": tableau.s,
        "p": order.verified_order,
        "q": "inf" if q is None else q,
        "principal_error": order.principal_error,
        "D": float(order.D),
        "problems": problems,
    }


def catalog_health() -> Dict[str, Any]:
    """
    Re-verify every catalog entry against its reference metadata.

    Returns:
        dict: overall_status (healthy | degraded | unhealthy) and per-method results
    """
    started = time.perf_counter()
    results = {}
    failed = 0
    for entry in all_entries():
        try:
            results[entry.name] = check_entry(entry)
        except Exception as e:
            results[entry.name] = {"status": "error", "problems": [str(e)]}
        if results[entry.name]["status"] != "healthy":
            failed += 1
            logger.warning("Catalog entry %s: %s", entry.name, results[entry.name]["problems"])

    if failed == len(results):
        overall = "unhealthy"
    elif failed:
        overall = "degraded"
    else:
        overall = "healthy"
    return {
        "overall_status": overall,
        "methods": results,
        "elapsed_s": time.perf_counter() - started,
    }


def register_monitoring_tools(mcp_server) -> None:
    """
    Register catalog health monitoring tools with the MCP server.

    Args:
        mcp_server: FastMCP server instance
    """

    @mcp_server.tool
    def catalog_health_check() -> Dict[str, Any]:
        """
        Check that every catalog method still reproduces its published (s, p, q) and metrics.

        Returns:
            dict: overall status plus per-method computed values and discrepancies
        """
        return format_tool_response(catalog_health(), "catalog_health_check")
