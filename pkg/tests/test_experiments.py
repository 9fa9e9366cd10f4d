import numpy as np
import pytest

from core.exceptions import BlowUpError, UnknownMethodError, ValidationError
from experiments import (
    CSV_HEADER,
    ConvergenceResult,
    advection_problem,
    burgers_problem,
    derivative_6th,
    error_profile,
    finite_difference_weights,
    fit_rate,
    gark_check,
    make_problem,
    resolved_rate,
    run_convergence,
)
from catalog import get
from config.settings import WsoConfig
from experiments.convergence import solve_on_grid
from experiments.problems import advection_forcing, exact_solution
from timestep.erk import step_sizes

GRIDS = (50, 100, 200, 400, 800)


def test_fit_rate_examples():
    assert fit_rate([1.0, 1 / 8], [1.0, 1 / 2]) == pytest.approx([3.0])
    assert fit_rate([4.0, 2.0, 1.0], [0.4, 0.2, 0.1]) == pytest.approx([1.0, 1.0])
    assert fit_rate([1e-3, 1e-3], [0.2, 0.1]) == pytest.approx([0.0])


@pytest.mark.parametrize(
    "errors, dts",
    [([1.0], [0.1]), ([1.0, 0.5], [0.1]), ([0.0, 1.0], [0.2, 0.1]), ([1.0, 0.5], [0.2, -0.1])],
)
def test_fit_rate_rejects_bad_input(errors, dts):
    with pytest.raises(ValidationError):
        fit_rate(errors, dts)


@pytest.mark.parametrize("make", [advection_problem, burgers_problem])
def test_exact_state_satisfies_semi_discrete_system(make):
    problem = make(40)
    t = 0.35
    ivp = problem.make_ivp(1.0)
    y = exact_solution(problem.x[1:], t)
    u_t = -(1.0 + problem.x[1:]) / (1.0 + t) ** 2
    assert np.max(np.abs(ivp.evaluate(t, y) - u_t)) < 1e-10


def test_advection_operator_is_linear():
    ivp = advection_problem(16).make_ivp(0.7)
    rng = np.random.default_rng(7)
    u, v = rng.standard_normal(16), rng.standard_normal(16)
    assert np.allclose(ivp.apply(2.0 * u - v), 2.0 * ivp.apply(u) - ivp.apply(v), atol=1e-12)


def test_problem_grid_layout():
    problem = make_problem("advection", 10)
    assert problem.x[0] == 0.0 and problem.x[-1] == 1.0
    assert problem.initial_state().shape == (10,)
    assert problem.full_state(problem.initial_state(), 0.0)[0] == 1.0
    assert burgers_problem(10).time_step(0.9) == pytest.approx(0.045)
    with pytest.raises(ValidationError):
        make_problem("heat", 10)
    with pytest.raises(ValidationError):
        advection_problem(3)


def test_one_sided_weights_reproduce_polynomials():
    weights = finite_difference_weights(tuple(range(7)))
    assert weights.sum() == pytest.approx(0.0, abs=1e-14)
    assert weights @ np.arange(7.0) == pytest.approx(1.0, abs=1e-13)


def test_derivative_of_linear_data_is_constant():
    x = np.linspace(0.0, 1.0, 21)
    du = derivative_6th(3.0 * x - 1.0, x[1] - x[0])
    assert np.allclose(du, 3.0, rtol=0, atol=1e-11)


def test_derivative_is_exact_for_sextic():
    x = np.linspace(0.0, 1.0, 65)
    du = derivative_6th(x ** 6, x[1] - x[0])
    assert np.max(np.abs(du - 6.0 * x ** 5)) < 1e-10


def test_derivative_is_sixth_order():
    errors = []
    for n in (32, 64):
        x = np.linspace(0.0, 1.0, n + 1)
        errors.append(np.max(np.abs(derivative_6th(np.sin(x), 1.0 / n) - np.cos(x))))
    assert np.log2(errors[0] / errors[1]) > 5.5


def test_derivative_rejects_small_grid():
    with pytest.raises(ValidationError):
        derivative_6th(np.ones(6), 0.1)


def test_csv_format():
    result = ConvergenceResult(
        method="RK4", problem="advection", cfl=0.9, t_end=0.7,
        grids=[50, 100], dts=[0.018, 0.009], err_u=[1e-6, 2.5e-7], err_ux=[1e-4, 5e-5],
        rate_u=[2.0], rate_ux=[1.0],
    )
    lines = result.to_csv().splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1] == "50,0.017999999999999999,9.9999999999999995e-07,0.0001,,"
    assert lines[2].split(",")[-2:] == ["2", "1"]
    assert result.finest_rate_u == 2.0
    assert result.to_dict()["grids"] == [50, 100]


def test_resolved_rate_skips_pairs_at_round_off():
    errors = [1e-6, 1.25e-7, 2e-13, 1.9e-13]
    rates = fit_rate(errors, [0.4, 0.2, 0.1, 0.05])
    assert resolved_rate(errors, rates, [1e-12] * 4) == pytest.approx(3.0)
    assert resolved_rate(errors, rates, [0.0] * 4) == rates[-1]
    assert resolved_rate(errors, rates, [1e-5] * 4) is None


def test_resolved_rate_ux_floor_scales_with_grid():
    result = ConvergenceResult(
        method="X", problem="advection", cfl=0.9, t_end=0.7,
        grids=[100, 200, 400], dts=[0.4, 0.2, 0.1], err_u=[1e-6, 1.25e-7, 1.5625e-8],
        err_ux=[1.6e-7, 1e-8, 5e-10],
    )
    result.rate_u = fit_rate(result.err_u, result.dts)
    result.rate_ux = fit_rate(result.err_ux, result.dts)
    # 5e-10 is under the N = 400 derivative floor of 2e-9
    assert result.resolved_rate_ux == pytest.approx(4.0)
    assert result.finest_rate_ux != pytest.approx(4.0)
    assert result.to_dict()["resolved_rate_u"] == pytest.approx(3.0)


@pytest.mark.parametrize("N, cfl, t_end", [(400, 0.9, 0.7), (800, 0.9, 0.7), (10, 0.5, 0.5), (50, 0.9, 0.8)])
def test_uniform_step_lands_on_final_time(N, cfl, t_end):
    problem = advection_problem(N)
    dt, n = problem.uniform_step(cfl, t_end)
    assert dt <= problem.time_step(cfl) * (1 + 1e-12)
    assert (n - 1) * dt < t_end - 1e-12
    assert n * dt == pytest.approx(t_end, rel=1e-14)
    steps = list(step_sizes(0.0, t_end, dt))
    assert len(steps) == n
    assert all(h == pytest.approx(dt, rel=1e-9) for _, h in steps)


def test_uniform_step_counts():
    assert advection_problem(400).uniform_step(0.9, 0.7) == (pytest.approx(0.7 / 312), 312)
    assert advection_problem(10).uniform_step(0.5, 0.5) == (pytest.approx(0.05), 10)
    assert burgers_problem(100).uniform_step(0.9, 0.8)[1] == 178


def test_convergence_records_actual_step_sizes():
    result = run_convergence("RK4", "advection", grids=[40, 80], threads=1)
    for N, dt in zip(result.grids, result.dts):
        n = round(result.t_end / dt)
        assert n * dt == pytest.approx(result.t_end, rel=1e-14)
        assert dt <= 0.9 / N * (1 + 1e-12)


def full_grid_solution(tableau, problem, rhs, cfl, t_end):
    """Reference run on all N + 1 nodes, resetting u_0 to g0 at every stage time."""
    A, b, c = tableau.to_floats()
    dt, n = problem.uniform_step(cfl, t_end)
    u = problem.exact(problem.x, 0.0)
    for step in range(n):
        t_n = step * dt
        k = []
        for i in range(tableau.s):
            stage = u + dt * sum((A[i, j] * k[j] for j in range(i)), np.zeros_like(u))
            stage[0] = problem.boundary(t_n + c[i] * dt)
            k.append(rhs(t_n + c[i] * dt, stage))
        u = u + dt * sum((b[i] * k[i] for i in range(tableau.s)), np.zeros_like(u))
        u[0] = problem.boundary(t_n + dt)
    return u


def advection_full_rhs(problem):
    def rhs(t, u):
        du = np.zeros_like(u)
        du[1:] = -(u[1:] - u[:-1]) / problem.dx + advection_forcing(problem.x[1:], t)
        return du
    return rhs


def burgers_full_rhs(problem):
    def rhs(t, u):
        du = np.zeros_like(u)
        du[1:] = -u[1:] * (u[1:] - u[:-1]) / problem.dx
        return du
    return rhs


@pytest.mark.parametrize("method", ["(5,3,3)", "ERK313", "RK4"])
@pytest.mark.parametrize(
    "make, full_rhs, t_end",
    [(advection_problem, advection_full_rhs, 0.7), (burgers_problem, burgers_full_rhs, 0.8)],
)
def test_boundary_node_matches_full_grid_with_stage_reset(method, make, full_rhs, t_end):
    tableau = get(method).tableau
    problem = make(40)
    reference = full_grid_solution(tableau, problem, full_rhs(problem), 0.9, t_end)
    u, _ = solve_on_grid(tableau, problem, 0.9, t_end)
    assert u.shape == reference.shape
    assert np.max(np.abs(u - reference)) < 1e-12


def test_run_convergence_validation():
    with pytest.raises(ValidationError):
        run_convergence("RK4", "advection", grids=[100, 50])
    with pytest.raises(ValidationError):
        run_convergence("RK4", "advection", cfl=1.5, grids=[10, 20])
    with pytest.raises(ValidationError):
        run_convergence("RK4", "diffusion", grids=[10, 20])
    with pytest.raises(ValidationError):
        run_convergence("RK4", "burgers", grids=[10, 20], use_gark=True)
    with pytest.raises(UnknownMethodError):
        run_convergence("nonexistent", "advection", grids=[10, 20])


def test_run_convergence_small_grids_are_deterministic():
    first = run_convergence("(5,3,3)", "advection", grids=[20, 40], threads=2)
    second = run_convergence("(5,3,3)", "advection", grids=[20, 40], threads=1)
    assert first.to_csv() == second.to_csv()
    assert len(first.rate_u) == 1
    assert first.err_u[1] < first.err_u[0]


def test_blow_up_reports_grid(monkeypatch):
    def explode(method, ivp, dt):
        raise BlowUpError(0.25)

    monkeypatch.setattr("experiments.convergence.integrate", explode)
    with pytest.raises(BlowUpError) as excinfo:
        run_convergence("RK4", "burgers", grids=[8], threads=1)
    assert excinfo.value.grid == 8
    assert "N=8" in str(excinfo.value)


def test_error_profile_rows():
    profile = error_profile("(3,2,2)", "advection", 40, nodes=5)
    assert [row["x"] for row in profile] == pytest.approx([0.0, 0.025, 0.05, 0.075, 0.1])
    assert profile[0]["err_u"] < 1e-15


@pytest.mark.parametrize("method", ["(3,2,2)", "(7,4,4)", "(9,5,5)", "RK4"])
def test_gark_check(method):
    result = gark_check(method, N=100, steps=50)
    assert result["steps"] == 50
    assert result["max_rel_dev"] <= 1e-11
    assert result["L_applications_gark"] == 50 * result["d"]
    assert result["L_applications_direct"] == 50 * result["s"]


@pytest.mark.slow
@pytest.mark.parametrize(
    "method, rate_u, rate_ux",
    [
        ("RK4", 2.0, None),
        ("Shu-Osher", 2.0, None),
        ("Dormand-Prince", 2.0, None),
        ("(3,2,2)", 2.0, 2.0),
        ("(4,3,2)", 3.0, 2.0),
        ("ERK312", 3.0, 2.0),
        ("(5,3,3)", 3.0, 3.0),
        ("ERK313", 3.0, 3.0),
    ],
)
def test_advection_rates(method, rate_u, rate_ux):
    result = run_convergence(method, "advection", cfl=0.9, grids=GRIDS, t_end=0.7)
    assert result.resolved_rate_u == pytest.approx(rate_u, abs=0.3)
    if rate_ux is not None:
        assert result.resolved_rate_ux == pytest.approx(rate_ux, abs=0.3)


# fourth and fifth order errors reach round-off before N = 800, so these
# start one grid coarser and report the finest pair above the floor
@pytest.mark.slow
@pytest.mark.parametrize(
    "method, rate_u, rate_ux",
    [
        ("(6,4,3)", 4.0, 3.0),
        ("(7,4,4)", 4.0, 4.0),
        ("(8,5,4)", 5.0, 4.0),
        ("(9,5,5)", 5.0, 5.0),
    ],
)
def test_advection_high_order_rates(method, rate_u, rate_ux):
    result = run_convergence(method, "advection", cfl=0.9, grids=WsoConfig.DEFAULT_GRIDS, t_end=0.7)
    assert result.resolved_rate_u == pytest.approx(rate_u, abs=0.3)
    assert result.resolved_rate_ux == pytest.approx(rate_ux, abs=0.3)


@pytest.mark.slow
def test_advection_gark_path_matches_direct():
    direct = run_convergence("(5,3,3)", "advection", grids=(50, 100, 200))
    gark = run_convergence("(5,3,3)", "advection", grids=(50, 100, 200), use_gark=True)
    for a, b in zip(direct.err_u, gark.err_u):
        assert b == pytest.approx(a, rel=1e-6, abs=1e-12)


@pytest.mark.slow
@pytest.mark.parametrize("method", ["RK4", "Shu-Osher", "Dormand-Prince"])
def test_burgers_comparator_rates(method):
    result = run_convergence(method, "burgers", cfl=0.9, grids=GRIDS, t_end=0.8)
    assert result.resolved_rate_u == pytest.approx(2.0, abs=0.3)
    assert result.resolved_rate_ux == pytest.approx(1.0, abs=0.3)


@pytest.mark.slow
@pytest.mark.parametrize("method", ["(5,3,3)", "ERK313", "(7,4,4)", "(9,5,5)"])
def test_burgers_high_wso_rates(method):
    result = run_convergence(method, "burgers", cfl=0.9, grids=GRIDS, t_end=0.8)
    assert result.resolved_rate_u >= 2.7
    assert result.resolved_rate_ux == pytest.approx(2.0, abs=0.3)


@pytest.mark.slow
@pytest.mark.parametrize("problem", ["advection", "burgers"])
@pytest.mark.parametrize("method", ["(5,3,3)", "ERK313", "(9,3,3)"])
def test_wso3_comparison(method, problem):
    result = run_convergence(method, problem, cfl=0.9, grids=GRIDS)
    assert result.resolved_rate_u == pytest.approx(3.0, abs=0.3)
