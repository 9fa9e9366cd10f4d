"""Configuration module for the weak-stage-order Runge-Kutta toolkit."""

import os
from typing import Dict, Any, Tuple

from dotenv import load_dotenv

load_dotenv()


class ConfigurationError(Exception):
    """Raised when required configuration is missing or invalid."""
    pass


def _env_int(var_name: str, default: int) -> int:
    raw = os.getenv(var_name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(
            f"Environment variable '{var_name}' must be an integer, got {raw!r}."
        )


def _env_float(var_name: str, default: float) -> float:
    raw = os.getenv(var_name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigurationError(
            f"Environment variable '{var_name}' must be a number, got {raw!r}."
        )


class WsoConfig:
    """Configuration class for verification, construction and experiments."""

    # Logging settings (stderr only; stdout is reserved for payloads)
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FORMAT = os.getenv("LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    # Parallelism for convergence runs; 0 means auto
    THREADS = _env_int("WSO_RK_THREADS", 0)

    # Order checker
    ORDER_CAP = _env_int("WSO_RK_ORDER_CAP", 6)
    TREE_MAX_ORDER = 8

    # S-reducibility exhaustive search bound
    REDUCIBILITY_MAX_STAGES = 12

    # Linear SSP coefficient bisection
    SSP_TOLERANCE = 1e-12

    # Experiments
    DEFAULT_CFL = _env_float("WSO_RK_CFL", 0.9)
    DEFAULT_GRIDS: Tuple[int, ...] = (25, 50, 100, 200, 400, 800)
    ADVECTION_T_END = 0.7
    BURGERS_T_END = 0.8
    # u errors below ROUNDOFF_FLOOR and u_x errors below
    # ROUNDOFF_FLOOR * DERIVATIVE_FLOOR_FACTOR * N count as round-off
    ROUNDOFF_FLOOR = _env_float("WSO_RK_ROUNDOFF_FLOOR", 1e-12)
    DERIVATIVE_FLOOR_FACTOR = 5.0

    # Output contract
    SPEC_VERSION = "1.0"

    # Server settings
    SERVER_NAME = os.getenv("SERVER_NAME", "WsoRungeKuttaServer")
    SERVER_VERSION = os.getenv("SERVER_VERSION", "1.0.0")

    @classmethod
    def resolved_threads(cls) -> int:
        """Worker count for grid-parallel runs (0 maps to the machine size)."""
        if cls.THREADS > 0:
            return cls.THREADS
        return min(32, os.cpu_count() or 1)

    @classmethod
    def get_server_instructions(cls) -> str:
        """Get server instructions."""
        return f"""
        This server verifies, constructs and exercises explicit Runge-Kutta
        methods with high weak stage order (WSO), in exact rational arithmetic.

        Output contract version: {cls.SPEC_VERSION}

        Available Operations:
        - Catalog listing and tableau export (JSON)
        - Verification: classical order, WSO, Krylov dimensions, structural audits
        - Construction: minimal-stage schemes and parallel-iterated schemes
        - Convergence studies on advection and Burgers problems (CSV)
        - GARK equivalence checks for linear problems
        - Catalog health check
        """

    @classmethod
    def validate_configuration(cls) -> Dict[str, Any]:
        """Validate current configuration and return status."""
        issues = []

        if cls.THREADS < 0:
            issues.append(f"WSO_RK_THREADS must be >= 0, got {cls.THREADS}")
        if not 1 <= cls.ORDER_CAP <= cls.TREE_MAX_ORDER:
            issues.append(
                f"WSO_RK_ORDER_CAP must lie in 1..{cls.TREE_MAX_ORDER}, got {cls.ORDER_CAP}"
            )
        if not 0.0 < cls.DEFAULT_CFL <= 1.0:
            issues.append(f"WSO_RK_CFL must lie in (0, 1], got {cls.DEFAULT_CFL}")
        if not cls.ROUNDOFF_FLOOR >= 0.0:
            issues.append(f"WSO_RK_ROUNDOFF_FLOOR must be >= 0, got {cls.ROUNDOFF_FLOOR}")
        if cls.LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            issues.append(f"Unknown LOG_LEVEL: {cls.LOG_LEVEL}")

        return {
            "valid": len(issues) == 0,
            "issues": issues,
            "threads": cls.resolved_threads(),
            "order_cap": cls.ORDER_CAP,
            "spec_version": cls.SPEC_VERSION,
        }
