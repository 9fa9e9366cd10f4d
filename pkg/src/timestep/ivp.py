"""Initial value problems consumed by the integrators."""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


@dataclass
class GenericIVP:
    """y' = rhs(t, y), y(t0) = y0."""
    rhs: Callable[[float, np.ndarray], np.ndarray]
    y0: np.ndarray
    t0: float
    t_end: float

    @property
    def dimension(self) -> int:
        return int(np.size(self.y0))

    def evaluate(self, t: float, y: np.ndarray) -> np.ndarray:
        return self.rhs(t, y)


@dataclass
class LinearIVP:
    """
    y' = L y + g(t) with L given only through its action.

    ``applications`` counts calls of ``apply`` so the integrators can be
    audited; each instance belongs to a single run.
    """
    apply_L: Callable[[np.ndarray], np.ndarray]
    g: Callable[[float], np.ndarray]
    y0: np.ndarray
    t0: float
    t_end: float
    applications: int = field(default=0)

    @property
    def dimension(self) -> int:
        return int(np.size(self.y0))

    def apply(self, y: np.ndarray) -> np.ndarray:
        self.applications += 1
        return self.apply_L(y)

    def evaluate(self, t: float, y: np.ndarray) -> np.ndarray:
        return self.apply(y) + self.g(t)

    def reset_count(self) -> None:
        self.applications = 0
