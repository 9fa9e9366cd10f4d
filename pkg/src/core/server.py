"""FastMCP wiring for the wso-rk tools."""

import logging

from fastmcp import FastMCP
from config.settings import WsoConfig

logger = logging.getLogger(__name__)

TOOL_GROUPS = ("catalog", "verification", "construction", "experiments", "monitoring")


def create_server() -> FastMCP:
    """Bare server carrying the configured name, version and instructions."""
    return FastMCP(
        name=WsoConfig.SERVER_NAME,
        instructions=WsoConfig.get_server_instructions(),
        version=WsoConfig.SERVER_VERSION
    )


def register_all_tools(mcp_server: FastMCP) -> None:
    """Attach every tool group to ``mcp_server``."""
    from catalog.tools import register_catalog_tools
    from conditions.tools import register_verification_tools
    from construct.tools import register_construction_tools
    from experiments.tools import register_experiment_tools
    from monitoring.health import register_monitoring_tools

    for register in (
        register_catalog_tools,
        register_verification_tools,
        register_construction_tools,
        register_experiment_tools,
        register_monitoring_tools,
    ):
        register(mcp_server)
    logger.debug("Registered tool groups: %s", ", ".join(TOOL_GROUPS))


def initialize_server() -> FastMCP:
    """
    Server with all tool groups attached.

    Configuration problems are logged and do not stop startup.
    """
    config_status = WsoConfig.validate_configuration()
    for issue in config_status["issues"]:
        logger.warning("Configuration issue: %s", issue)

    server = create_server()
    register_all_tools(server)
    return server
