"""Sixth-order finite-difference first derivative on a uniform grid."""

from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from core.exceptions import SingularSystemError, ValidationError
from exact import rmatrix, rvector, solve_linear, to_float

STENCIL_WIDTH = 7
CENTERED = np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0


@lru_cache(maxsize=None)
def finite_difference_weights(offsets: Tuple[int, ...]) -> np.ndarray:
    """
    Exact first-derivative weights for the given node offsets (in units of dx).

    Solves sum_j w_j o_j^m = [m == 1] for m = 0..len(offsets)-1.
    """
    n = len(offsets)
    system = rmatrix([[o ** m for o in offsets] for m in range(n)])
    rhs = rvector([int(m == 1) for m in range(n)])
    weights = solve_linear(system, rhs)
    if weights is None:
        raise SingularSystemError(f"Stencil offsets {offsets} are not distinct")
    return to_float(weights)


def one_sided_weights(node: int, width: int = STENCIL_WIDTH) -> np.ndarray:
    """Weights for node ``node`` (0-based) using grid nodes 0..width-1."""
    return finite_difference_weights(tuple(j - node for j in range(width)))


def derivative_6th(u: Sequence[float], dx: float) -> np.ndarray:
    """
    u_x at every node: centered 7-point stencil inside, one-sided 7-point
    stencils at the three nodes nearest each end.

    Raises:
        ValidationError: fewer than 7 nodes.
    """
    u = np.asarray(u, dtype=np.float64)
    n = u.shape[0]
    if n < STENCIL_WIDTH:
        raise ValidationError(f"Grid too small for a 7-point stencil: {n} nodes", field="u")

    du = np.empty_like(u)
    half = STENCIL_WIDTH // 2
    du[half:n - half] = sum(
        CENTERED[k] * u[k:n - STENCIL_WIDTH + 1 + k] for k in range(STENCIL_WIDTH)
    )
    for node in range(half):
        weights = one_sided_weights(node)
        du[node] = weights @ u[:STENCIL_WIDTH]
        du[n - 1 - node] = -(weights @ u[::-1][:STENCIL_WIDTH])
    return du / dx
