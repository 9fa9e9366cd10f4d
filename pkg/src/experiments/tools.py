"""Convergence study tools for FastMCP server."""

from typing import Any, Dict, List, Literal, Optional

from experiments.convergence import gark_check, run_convergence
from utils.helpers import format_tool_response


def register_experiment_tools(mcp_server) -> None:
    """
    Register convergence and GARK comparison tools with the MCP server.

    Args:
        mcp_server: FastMCP server instance
    """

    @mcp_server.tool
    def run_convergence_study(
        method: str,
        problem: Literal["advection", "burgers"] = "advection",
        cfl: float = 0.9,
        grids: Optional[List[int]] = None,
        t_end: Optional[float] = None,
    ) -> Dict[str, Any]:
        """
        Measure temporal convergence of a catalog method on a manufactured 1D problem.

        Args:
            method: Catalog name or alias, e.g. "(5,3,3)" or "rk4"
            problem: "advection" (t_end 0.7 by default) or "burgers" (0.8)
            cfl: CFL number in (0, 1]
            grids: Strictly increasing cell counts; configured defaults when omitted
            t_end: Final time override

        Returns:
            dict: errors of u and u_x per grid, pairwise rates, the rates above
                round-off and the CSV rendering

        Raises:
            UnknownMethodError: If the method is not in the catalog
            BlowUpError: If the run diverges (the grid is reported)
        """
        result = run_convergence(method, problem, cfl=cfl, grids=grids, t_end=t_end)
        data = result.to_dict()
        data["csv"] = result.to_csv()
        return format_tool_response(data, "run_convergence_study")

    @mcp_server.tool
    def gark_equivalence_check(method: str, n: int = 100, steps: int = 50) -> Dict[str, Any]:
        """
        Compare the reduced GARK path with direct RK stepping on the advection system.

        Args:
            method: Catalog name or alias
            n: Number of grid cells
            steps: Number of time steps at CFL 0.9

        Returns:
            dict: max_rel_dev and operator application counts for both paths
        """
        return format_tool_response(gark_check(method, N=n, steps=steps), "gark_equivalence_check")
