"""Explicit Runge-Kutta stepping in binary64."""

import math
from typing import Union

import numpy as np

from core.exceptions import BlowUpError, ValidationError
from tableau.model import Tableau
from timestep.ivp import GenericIVP, LinearIVP

Problem = Union[GenericIVP, LinearIVP]


def check_finite(y: np.ndarray, t: float) -> np.ndarray:
    if not np.all(np.isfinite(y)):
        raise BlowUpError(t, operation="step")
    return y


class ExplicitRK:
    """Fixed-step explicit RK integrator; coefficients are rounded once here."""

    def __init__(self, tableau: Tableau):
        self.tableau = tableau
        self.A, self.b, self.c = tableau.to_floats()
        self.s = tableau.s

    @property
    def name(self) -> str:
        return self.tableau.name

    def step(self, ivp: Problem, t_n: float, y_n: np.ndarray, dt: float) -> np.ndarray:
        """
        One step: Y_i = y_n + dt sum_{j<i} a_ij k_j, k_i = f(t_n + c_i dt, Y_i).

        Raises:
            ValidationError: dt is not positive.
            BlowUpError: the new state is not finite.
        """
        if not dt > 0:
            raise ValidationError(f"Step size must be positive, got {dt}", field="dt")
        y_n = np.asarray(y_n, dtype=np.float64)
        k = np.zeros((self.s,) + y_n.shape)
        for i in range(self.s):
            stage = y_n + dt * np.tensordot(self.A[i, :i], k[:i], axes=1) if i else y_n
            k[i] = ivp.evaluate(t_n + self.c[i] * dt, stage)
        y_next = y_n + dt * np.tensordot(self.b, k, axes=1)
        return check_finite(y_next, t_n + dt)


def erk_step(tableau: Tableau, ivp: Problem, t_n: float, y_n: np.ndarray, dt: float) -> np.ndarray:
    return ExplicitRK(tableau).step(ivp, t_n, y_n, dt)


def step_sizes(t0: float, t_end: float, dt: float):
    """
    Uniform steps of size dt; the last one is shortened to land on t_end.

    Yields (t_n, h) pairs.
    """
    if not dt > 0:
        raise ValidationError(f"Step size must be positive, got {dt}", field="dt")
    count = max(0, math.ceil((t_end - t0) / dt - 1e-12))
    for n in range(count):
        t_n = t0 + n * dt
        yield t_n, (t_end - t_n if n == count - 1 else dt)
