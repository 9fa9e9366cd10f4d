"""Time integration package initialization."""

from timestep.ivp import GenericIVP, LinearIVP
from timestep.erk import ExplicitRK, erk_step, step_sizes
from timestep.gark import GarkScheme, GarkIntegrator, gark_coefficients, gark_step
from timestep.integrate import Trajectory, integrate

__all__ = [
    "GenericIVP",
    "LinearIVP",
    "ExplicitRK",
    "erk_step",
    "step_sizes",
    "GarkScheme",
    "GarkIntegrator",
    "gark_coefficients",
    "gark_step",
    "Trajectory",
    "integrate",
]
