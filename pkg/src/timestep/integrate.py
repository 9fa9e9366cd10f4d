"""Fixed-step integration loop."""

import logging
from dataclasses import dataclass
from typing import Protocol, Union

import numpy as np

from tableau.model import Tableau
from timestep.erk import ExplicitRK, Problem, step_sizes

logger = logging.getLogger(__name__)


class Stepper(Protocol):
    name: str

    def step(self, ivp, t_n: float, y_n: np.ndarray, dt: float) -> np.ndarray:
        ...


@dataclass
class Trajectory:
    """Terminal state of a run."""
    y: np.ndarray
    t: float
    steps: int


def integrate(method: Union[Stepper, Tableau], ivp: Problem, dt: float) -> Trajectory:
    """
    Integrate ``ivp`` from t0 to t_end with uniform steps of size dt.

    A bare Tableau is wrapped in an ExplicitRK integrator. The last step is
    shortened so the run ends exactly at t_end.

    Raises:
        ValidationError: dt is not positive.
        BlowUpError: a step produced a non-finite state.
    """
    stepper = ExplicitRK(method) if isinstance(method, Tableau) else method
    y = np.array(ivp.y0, dtype=np.float64)
    t = ivp.t0
    steps = 0
    for t_n, h in step_sizes(ivp.t0, ivp.t_end, dt):
        y = stepper.step(ivp, t_n, y, h)
        t = t_n + h
        steps += 1
    logger.debug("%s: %d steps to t=%g", stepper.name, steps, t)
    return Trajectory(y=y, t=t, steps=steps)
