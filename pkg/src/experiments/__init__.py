"""Numerical experiments package initialization."""

from experiments.problems import (
    PROBLEM_KINDS,
    SemiDiscreteProblem,
    advection_problem,
    burgers_problem,
    make_problem,
)
from experiments.stencils import derivative_6th, finite_difference_weights
from experiments.convergence import (
    CSV_HEADER,
    ConvergenceResult,
    fit_rate,
    resolved_rate,
    run_convergence,
    error_profile,
    gark_check,
)

__all__ = [
    "PROBLEM_KINDS",
    "SemiDiscreteProblem",
    "advection_problem",
    "burgers_problem",
    "make_problem",
    "derivative_6th",
    "finite_difference_weights",
    "CSV_HEADER",
    "ConvergenceResult",
    "fit_rate",
    "resolved_rate",
    "run_convergence",
    "error_profile",
    "gark_check",
]
