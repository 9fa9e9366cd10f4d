#!/usr/bin/env python3
"""
MCP entry point for the wso-rk toolkit.

Exposes catalog, verification, construction and convergence operations as
tools over the STDIO transport. Logs go to stderr; stdout carries the
protocol stream.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))

from config.settings import WsoConfig  # noqa: E402
from core.server import initialize_server  # noqa: E402
from utils.helpers import setup_logging  # noqa: E402


def main() -> int:
    logger = setup_logging(level=WsoConfig.LOG_LEVEL)
    server = initialize_server()
    logger.info("Serving %s %s over STDIO", WsoConfig.SERVER_NAME, WsoConfig.SERVER_VERSION)
    try:
        server.run()
    except KeyboardInterrupt:
        logger.info("Interrupted, shutting down")
    except Exception:
        logger.exception("%s stopped on an unexpected error", WsoConfig.SERVER_NAME)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
