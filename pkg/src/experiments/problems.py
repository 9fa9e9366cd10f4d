"""
Manufactured 1D test problems on [0, 1].

Both problems share the exact solution u(x, t) = (1 + x) / (1 + t), which is
linear in x, so the first-order upwind discretization introduces no spatial
error and measured errors are purely temporal.

Grid convention: N cells, nodes x_i = i / N. The inflow node x_0 = 0 is not
an unknown; its value is g0(t) at every stage time and it is prepended to
the state for error measurement.
"""

import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np

from core.exceptions import ValidationError
from timestep.ivp import GenericIVP, LinearIVP

PROBLEM_KINDS = ("advection", "burgers")


def exact_solution(x, t: float):
    return (1.0 + x) / (1.0 + t)


def exact_derivative(x, t: float):
    return np.full_like(np.asarray(x, dtype=np.float64), 1.0 / (1.0 + t))


def inflow(t: float) -> float:
    return 1.0 / (1.0 + t)


def advection_forcing(x, t: float):
    return (t - x) / (1.0 + t) ** 2


@dataclass
class SemiDiscreteProblem:
    """A method-of-lines system plus its exact solution and CFL data."""
    label: str
    N: int
    dx: float
    x: np.ndarray
    wave_speed_bound: float
    make_ivp: Callable[[float], Union[LinearIVP, GenericIVP]]
    exact: Callable = exact_solution
    exact_dx: Callable = exact_derivative
    boundary: Callable[[float], float] = inflow

    @property
    def linear(self) -> bool:
        return self.label == "advection"

    def full_state(self, y: np.ndarray, t: float) -> np.ndarray:
        """Nodal values on the whole grid, inflow node included."""
        return np.concatenate(([self.boundary(t)], y))

    def initial_state(self) -> np.ndarray:
        return self.exact(self.x[1:], 0.0)

    def time_step(self, cfl: float) -> float:
        return cfl * self.dx / self.wave_speed_bound

    def uniform_step(self, cfl: float, t_end: float) -> Tuple[float, int]:
        """
        (dt, n) with n = ceil(t_end / time_step(cfl)) and dt = t_end / n.

        Every step has the same size and the last one lands on t_end, so the
        CFL number never exceeds ``cfl`` and no step is partial.
        """
        n = max(1, math.ceil(t_end / self.time_step(cfl) - 1e-12))
        return t_end / n, n


def _check_grid(N: int) -> None:
    if N < 4:
        raise ValidationError(f"Grid needs at least 4 cells, got {N}", field="N")


def upwind_difference(y: np.ndarray, left: float, dx: float) -> np.ndarray:
    """(u_i - u_{i-1}) / dx with u_0 = left."""
    shifted = np.empty_like(y)
    shifted[0] = left
    shifted[1:] = y[:-1]
    return (y - shifted) / dx


def advection_problem(N: int) -> SemiDiscreteProblem:
    """
    u_t = -u_x + f(x, t), u(0, t) = g0(t), first-order upwind in space.

    Exposed as y' = L y + g(t): L is the upwind operator with a homogeneous
    inflow value, and g carries f at the nodes plus g0(t) / dx at the first
    unknown.
    """
    _check_grid(N)
    x = np.arange(N + 1) / N
    dx = 1.0 / N
    interior = x[1:]

    def apply_L(y):
        return -upwind_difference(y, 0.0, dx)

    def forcing(t):
        g = advection_forcing(interior, t)
        g[0] += inflow(t) / dx
        return g

    def make_ivp(t_end: float) -> LinearIVP:
        return LinearIVP(apply_L=apply_L, g=forcing, y0=exact_solution(interior, 0.0), t0=0.0, t_end=t_end)

    return SemiDiscreteProblem(label="advection", N=N, dx=dx, x=x, wave_speed_bound=1.0, make_ivp=make_ivp)


def burgers_problem(N: int) -> SemiDiscreteProblem:
    """
    u_t + u u_x = 0, u(0, t) = g0(t), first-order upwind (u > 0 throughout).

    The CFL speed bound is max u over the exact solution, u(1, 0) = 2.
    """
    _check_grid(N)
    x = np.arange(N + 1) / N
    dx = 1.0 / N
    interior = x[1:]

    def rhs(t, y):
        return -y * upwind_difference(y, inflow(t), dx)

    def make_ivp(t_end: float) -> GenericIVP:
        return GenericIVP(rhs=rhs, y0=exact_solution(interior, 0.0), t0=0.0, t_end=t_end)

    return SemiDiscreteProblem(label="burgers", N=N, dx=dx, x=x, wave_speed_bound=2.0, make_ivp=make_ivp)


def make_problem(kind: str, N: int) -> SemiDiscreteProblem:
    if kind == "advection":
        return advection_problem(N)
    if kind == "burgers":
        return burgers_problem(N)
    raise ValidationError(
        f"Unknown problem {kind!r}; expected one of {', '.join(PROBLEM_KINDS)}", field="problem"
    )
