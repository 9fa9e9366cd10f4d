"""Temporal convergence studies on the manufactured 1D problems."""

import io
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from catalog import get
from config.settings import WsoConfig
from core.exceptions import BlowUpError, ValidationError
from experiments.problems import PROBLEM_KINDS, SemiDiscreteProblem, advection_problem, make_problem
from experiments.stencils import derivative_6th
from tableau.model import Tableau
from timestep import ExplicitRK, GarkIntegrator, integrate
from utils.helpers import format_float17

logger = logging.getLogger(__name__)

CSV_HEADER = "N,dt,err_u,err_ux,rate_u,rate_ux"


def fit_rate(errors: Sequence[float], dts: Sequence[float]) -> List[float]:
    """
    Pairwise log-log slopes log(e_i / e_{i+1}) / log(dt_i / dt_{i+1}).

    Raises:
        ValidationError: unequal lengths, fewer than two entries, or a
            non-positive error or step size.
    """
    if len(errors) != len(dts) or len(errors) < 2:
        raise ValidationError("Need two or more (error, dt) pairs of equal length", field="errors")
    if any(not e > 0 for e in errors) or any(not h > 0 for h in dts):
        raise ValidationError("Errors and step sizes must be positive for rate fitting", field="errors")
    return [
        math.log(errors[i] / errors[i + 1]) / math.log(dts[i] / dts[i + 1])
        for i in range(len(errors) - 1)
    ]


def resolved_rate(errors: Sequence[float], rates: Sequence[float], floors: Sequence[float]) -> Optional[float]:
    """Rate of the finest consecutive pair whose errors both lie above their round-off floors."""
    for i in reversed(range(len(rates))):
        if errors[i] > floors[i] and errors[i + 1] > floors[i + 1]:
            return rates[i]
    return None


@dataclass
class ConvergenceResult:
    method: str
    problem: str
    cfl: float
    t_end: float
    grids: List[int] = field(default_factory=list)
    dts: List[float] = field(default_factory=list)
    err_u: List[float] = field(default_factory=list)
    err_ux: List[float] = field(default_factory=list)
    rate_u: List[float] = field(default_factory=list)
    rate_ux: List[float] = field(default_factory=list)

    @property
    def finest_rate_u(self) -> Optional[float]:
        return self.rate_u[-1] if self.rate_u else None

    @property
    def finest_rate_ux(self) -> Optional[float]:
        return self.rate_ux[-1] if self.rate_ux else None

    @property
    def resolved_rate_u(self) -> Optional[float]:
        return resolved_rate(self.err_u, self.rate_u, [WsoConfig.ROUNDOFF_FLOOR] * len(self.grids))

    @property
    def resolved_rate_ux(self) -> Optional[float]:
        floor = WsoConfig.ROUNDOFF_FLOOR * WsoConfig.DERIVATIVE_FLOOR_FACTOR
        return resolved_rate(self.err_ux, self.rate_ux, [floor * N for N in self.grids])

    def to_csv(self) -> str:
        """Header plus one row per grid; rates are blank on the first row."""
        out = io.StringIO()
        out.write(CSV_HEADER + "\n")
        for i, N in enumerate(self.grids):
            rate_u = self.rate_u[i - 1] if i else None
            rate_ux = self.rate_ux[i - 1] if i else None
            cells = [str(N)] + [
                format_float17(v) for v in (self.dts[i], self.err_u[i], self.err_ux[i], rate_u, rate_ux)
            ]
            out.write(",".join(cells) + "\n")
        return out.getvalue()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "problem": self.problem,
            "cfl": self.cfl,
            "t_end": self.t_end,
            "grids": self.grids,
            "dts": self.dts,
            "err_u": self.err_u,
            "err_ux": self.err_ux,
            "rate_u": self.rate_u,
            "rate_ux": self.rate_ux,
            "resolved_rate_u": self.resolved_rate_u,
            "resolved_rate_ux": self.resolved_rate_ux,
        }


def default_t_end(kind: str) -> float:
    return WsoConfig.BURGERS_T_END if kind == "burgers" else WsoConfig.ADVECTION_T_END


def _stepper(tableau: Tableau, problem: SemiDiscreteProblem, use_gark: bool):
    if use_gark:
        if not problem.linear:
            raise ValidationError("The GARK path needs a linear problem", field="problem")
        return GarkIntegrator(tableau)
    return ExplicitRK(tableau)


def solve_on_grid(tableau: Tableau, problem: SemiDiscreteProblem, cfl: float, t_end: float, use_gark: bool = False):
    """Terminal nodal solution (inflow node included) and the uniform dt used."""
    dt, _ = problem.uniform_step(cfl, t_end)
    try:
        trajectory = integrate(_stepper(tableau, problem, use_gark), problem.make_ivp(t_end), dt)
    except BlowUpError as exc:
        raise BlowUpError(exc.t, grid=problem.N, operation="run_convergence") from exc
    return problem.full_state(trajectory.y, trajectory.t), dt


def grid_errors(tableau: Tableau, kind: str, N: int, cfl: float, t_end: float, use_gark: bool = False):
    """(dt, max error of u, max error of u_x) on one grid."""
    started = time.perf_counter()
    problem = make_problem(kind, N)
    u, dt = solve_on_grid(tableau, problem, cfl, t_end, use_gark)
    err_u = float(np.max(np.abs(u - problem.exact(problem.x, t_end))))
    err_ux = float(np.max(np.abs(derivative_6th(u, problem.dx) - problem.exact_dx(problem.x, t_end))))
    logger.debug(
        "%s %s N=%d dt=%.3e err_u=%.3e err_ux=%.3e (%.2fs)",
        tableau.name, kind, N, dt, err_u, err_ux, time.perf_counter() - started,
    )
    return dt, err_u, err_ux


def run_convergence(
    method_name: str,
    problem_kind: str,
    cfl: Optional[float] = None,
    grids: Optional[Sequence[int]] = None,
    t_end: Optional[float] = None,
    use_gark: bool = False,
    threads: Optional[int] = None,
) -> ConvergenceResult:
    """
    Run one method on one problem over a sequence of grids at fixed CFL.

    Args:
        method_name: catalog name or alias
        problem_kind: "advection" or "burgers"
        cfl: CFL number in (0, 1] (WsoConfig.DEFAULT_CFL when omitted)
        grids: strictly increasing cell counts (WsoConfig.DEFAULT_GRIDS)
        t_end: final time (0.7 advection, 0.8 Burgers by default)
        use_gark: integrate the advection problem through the GARK form
        threads: worker cap (WsoConfig.resolved_threads() when omitted)

    Returns:
        ConvergenceResult: errors per grid with pairwise rates

    Raises:
        UnknownMethodError: method not in the catalog
        ValidationError: bad grids, CFL or problem kind
        BlowUpError: non-finite state, with the offending grid
    """
    if problem_kind not in PROBLEM_KINDS:
        raise ValidationError(
            f"Unknown problem {problem_kind!r}; expected one of {', '.join(PROBLEM_KINDS)}",
            field="problem",
        )
    cfl = WsoConfig.DEFAULT_CFL if cfl is None else cfl
    grids = list(WsoConfig.DEFAULT_GRIDS if grids is None else grids)
    t_end = default_t_end(problem_kind) if t_end is None else t_end
    if not 0 < cfl <= 1:
        raise ValidationError(f"CFL must lie in (0, 1], got {cfl}", field="cfl")
    if not grids or any(b <= a for a, b in zip(grids, grids[1:])):
        raise ValidationError(f"Grids must be strictly increasing: {grids}", field="grids")

    tableau = get(method_name).tableau
    workers = max(1, min(threads or WsoConfig.resolved_threads(), len(grids)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(
            lambda N: grid_errors(tableau, problem_kind, N, cfl, t_end, use_gark), grids
        ))

    result = ConvergenceResult(method=tableau.name, problem=problem_kind, cfl=cfl, t_end=t_end, grids=grids)
    for dt, err_u, err_ux in rows:
        result.dts.append(dt)
        result.err_u.append(err_u)
        result.err_ux.append(err_ux)
    if len(grids) >= 2:
        result.rate_u = fit_rate(result.err_u, result.dts)
        result.rate_ux = fit_rate(result.err_ux, result.dts)
    logger.info(
        "Convergence %s on %s: rate_u=%s rate_ux=%s above round-off",
        tableau.name, problem_kind, result.resolved_rate_u, result.resolved_rate_ux,
    )
    return result


def error_profile(
    method_name: str,
    problem_kind: str,
    N: int,
    cfl: Optional[float] = None,
    t_end: Optional[float] = None,
    nodes: int = 10,
) -> List[Dict[str, float]]:
    """Pointwise errors of u and u_x at the ``nodes`` grid points nearest x = 0."""
    cfl = WsoConfig.DEFAULT_CFL if cfl is None else cfl
    t_end = default_t_end(problem_kind) if t_end is None else t_end
    problem = make_problem(problem_kind, N)
    u, _ = solve_on_grid(get(method_name).tableau, problem, cfl, t_end)
    err_u = np.abs(u - problem.exact(problem.x, t_end))
    err_ux = np.abs(derivative_6th(u, problem.dx) - problem.exact_dx(problem.x, t_end))
    profile = [
        {"x": float(problem.x[i]), "err_u": float(err_u[i]), "err_ux": float(err_ux[i])}
        for i in range(min(nodes, N + 1))
    ]
    for row in profile:
        logger.debug("profile x=%.4f err_u=%.3e err_ux=%.3e", row["x"], row["err_u"], row["err_ux"])
    return profile


def gark_check(method_name: str, N: int = 100, steps: int = 50, cfl: Optional[float] = None) -> Dict[str, Any]:
    """
    Integrate the advection system through both the direct and the GARK
    path and compare.

    Returns:
        dict: max_rel_dev (inf-norm, relative to the direct result),
            L_applications_gark / L_applications_direct (totals over all
            steps), and the per-step counts d and s.
    """
    if steps < 1:
        raise ValidationError(f"steps must be >= 1, got {steps}", field="steps")
    tableau = get(method_name).tableau
    problem = advection_problem(N)
    dt = problem.time_step(WsoConfig.DEFAULT_CFL if cfl is None else cfl)
    t_end = steps * dt

    direct_ivp = problem.make_ivp(t_end)
    gark_ivp = problem.make_ivp(t_end)
    # same dt and step count on both paths
    direct = integrate(ExplicitRK(tableau), direct_ivp, dt)
    gark_integrator = GarkIntegrator(tableau)
    gark = integrate(gark_integrator, gark_ivp, dt)

    scale = max(float(np.max(np.abs(direct.y))), np.finfo(float).tiny)
    deviation = float(np.max(np.abs(gark.y - direct.y))) / scale
    return {
        "method": tableau.name,
        "N": N,
        "steps": direct.steps,
        "max_rel_dev": deviation,
        "L_applications_gark": gark_ivp.applications,
        "L_applications_direct": direct_ivp.applications,
        "d": gark_integrator.scheme.d,
        "s": tableau.s,
    }
