import math

import numpy as np
import pytest

from catalog import available_names, get
from core.exceptions import BlowUpError, ValidationError
from exact import matmul, to_float
from experiments import advection_problem
from tableau import Tableau
from timestep import (
    ExplicitRK,
    GarkIntegrator,
    GenericIVP,
    LinearIVP,
    erk_step,
    gark_coefficients,
    gark_step,
    integrate,
    step_sizes,
)


def scalar_linear(lam: float, forcing=None) -> LinearIVP:
    return LinearIVP(
        apply_L=lambda y: lam * y,
        g=forcing or (lambda t: np.zeros(1)),
        y0=np.ones(1),
        t0=0.0,
        t_end=1.0,
    )


def test_zero_rhs_keeps_state(erk533):
    ivp = GenericIVP(rhs=lambda t, y: np.zeros_like(y), y0=np.array([1.5, -2.0]), t0=0.0, t_end=1.0)
    assert np.array_equal(erk_step(erk533, ivp, 0.0, ivp.y0, 0.1), ivp.y0)


def test_constant_rhs_is_integrated_exactly(rk4):
    ivp = GenericIVP(rhs=lambda t, y: np.ones_like(y), y0=np.zeros(3), t0=0.0, t_end=1.0)
    y = erk_step(rk4, ivp, 0.0, ivp.y0, 0.25)
    assert np.allclose(y, 0.25, rtol=0, atol=1e-15)


def test_linear_amplification_322(erk322):
    lam, dt = -1.3, 0.2
    ivp = GenericIVP(rhs=lambda t, y: lam * y, y0=np.array([2.0]), t0=0.0, t_end=1.0)
    z = lam * dt
    expected = 2.0 * (1 + z + z * z / 2)
    assert erk_step(erk322, ivp, 0.0, ivp.y0, dt)[0] == pytest.approx(expected, rel=1e-14)


def test_small_step_increment_is_first_order(rk4):
    ivp = GenericIVP(rhs=lambda t, y: np.cos(t) + y, y0=np.array([1.0]), t0=0.0, t_end=1.0)
    for dt in (1e-3, 1e-5, 1e-7):
        increment = abs(erk_step(rk4, ivp, 0.0, ivp.y0, dt)[0] - 1.0)
        assert increment <= 2.0 * dt * 1.01


def test_step_rejects_nonpositive_dt(rk4):
    ivp = GenericIVP(rhs=lambda t, y: y, y0=np.ones(1), t0=0.0, t_end=1.0)
    with pytest.raises(ValidationError):
        erk_step(rk4, ivp, 0.0, ivp.y0, 0.0)


def test_blow_up_is_reported(rk4):
    ivp = GenericIVP(rhs=lambda t, y: np.full_like(y, np.inf), y0=np.ones(2), t0=0.0, t_end=1.0)
    with pytest.raises(BlowUpError, match="blow-up at t="):
        integrate(rk4, ivp, 0.1)


def test_step_sizes_shorten_last_step():
    steps = list(step_sizes(0.0, 1.0, 0.3))
    assert len(steps) == 4
    assert [h for _, h in steps[:3]] == [0.3, 0.3, 0.3]
    assert steps[-1][1] == pytest.approx(0.1)
    assert len(list(step_sizes(0.0, 1.0, 0.25))) == 4


def test_integrate_without_steps_returns_initial_state(rk4):
    ivp = GenericIVP(rhs=lambda t, y: y, y0=np.array([3.0]), t0=0.5, t_end=0.5)
    trajectory = integrate(rk4, ivp, 0.1)
    assert trajectory.steps == 0
    assert trajectory.y[0] == 3.0


def test_integrate_exponential_with_rk4(rk4):
    ivp = GenericIVP(rhs=lambda t, y: y, y0=np.array([1.0]), t0=0.0, t_end=1.0)
    trajectory = integrate(ExplicitRK(rk4), ivp, 1 / 512)
    assert trajectory.steps == 512
    assert trajectory.t == pytest.approx(1.0)
    assert abs(trajectory.y[0] - math.e) < 1e-10


def test_gark_coefficients_of_euler(euler):
    scheme = gark_coefficients(euler)
    assert scheme.d == 1
    assert scheme.A_hat.tolist() == [[0.0]]
    assert scheme.b_hat.tolist() == [1.0]
    assert scheme.b_breve.tolist() == [1.0]


def test_gark_coefficients_of_955():
    assert gark_coefficients(get("(9,5,5)").tableau).d == 5


@pytest.mark.parametrize("name", ["(3,2,2)", "(5,3,3)", "(7,4,4)", "RK4"])
def test_gark_forcing_rows_are_output_powers(name):
    t = get(name).tableau
    scheme = gark_coefficients(t)
    row = t.b
    rows = [row]
    for _ in range(scheme.d - 1):
        row = matmul(row, t.A)
        rows.append(row)
    assert not scheme.A_breve[0].any()
    for i in range(2, scheme.d + 1):
        assert np.array_equal(scheme.A_breve[i - 1], to_float(rows[scheme.d - i + 1]))
    assert scheme.A_hat[1, 0] == float(sum(rows[scheme.d - 1]))
    for i in range(3, scheme.d + 1):
        assert scheme.A_hat[i - 1, i - 2] == 1.0


def test_gark_requires_consistency():
    with pytest.raises(ValidationError):
        gark_coefficients(Tableau.build(A=[[0, 0], [1, 0]], b=["1/2", "1/4"]))


def test_gark_zero_problem_keeps_state(erk533):
    ivp = scalar_linear(0.0)
    assert gark_step(gark_coefficients(erk533), ivp, 0.0, ivp.y0, 0.3)[0] == 1.0


def test_gark_scalar_amplification(erk533):
    lam, dt = -0.7, 0.5
    ivp = scalar_linear(lam)
    z = lam * dt
    expected = 1 + z + z ** 2 / 2 + z ** 3 / 6
    assert gark_step(gark_coefficients(erk533), ivp, 0.0, ivp.y0, dt)[0] == pytest.approx(expected, rel=1e-14)


def test_gark_matches_direct_step_on_advection():
    t = get("(7,4,4)").tableau
    problem = advection_problem(50)
    dt = problem.time_step(0.9)
    ivp = problem.make_ivp(0.7)
    y0 = ivp.y0
    direct = erk_step(t, ivp, 0.0, y0, dt)
    gark = gark_step(gark_coefficients(t), ivp, 0.0, y0, dt)
    assert np.max(np.abs(gark - direct)) <= 1e-12 * np.max(np.abs(y0))


def random_linear_ivp(rng: np.random.Generator, n: int) -> LinearIVP:
    L = rng.standard_normal((n, n)) / math.sqrt(n)
    coeffs = rng.standard_normal((3, n))
    return LinearIVP(
        apply_L=lambda y: L @ y,
        g=lambda t: coeffs[0] + t * coeffs[1] + t * t * coeffs[2],
        y0=rng.standard_normal(n),
        t0=0.0,
        t_end=1.0,
    )


@pytest.mark.parametrize("name", available_names())
@pytest.mark.parametrize("seed", range(3))
def test_gark_equivalence_on_random_linear_problems(name, seed):
    rng = np.random.default_rng(seed)
    ivp = random_linear_ivp(rng, int(rng.integers(2, 21)))
    t = get(name).tableau
    dt = 0.1
    direct = erk_step(t, ivp, 0.3, ivp.y0, dt)
    gark = gark_step(gark_coefficients(t), ivp, 0.3, ivp.y0, dt)
    assert np.max(np.abs(gark - direct)) <= 1e-11 * np.max(np.abs(direct))


@pytest.mark.parametrize("name", ["(5,3,3)", "(9,5,5)", "Dormand-Prince"])
def test_gark_operator_count(name):
    t = get(name).tableau
    integrator = GarkIntegrator(t)
    ivp = scalar_linear(-1.0)
    integrator.step(ivp, 0.0, ivp.y0, 0.1)
    assert ivp.applications == integrator.scheme.d

    ivp.reset_count()
    erk_step(t, ivp, 0.0, ivp.y0, 0.1)
    assert ivp.applications == t.s


def test_linear_problem_order_through_stability_function(rk4):
    lam = -1.0
    for dt in (0.1, 0.05):
        ivp = scalar_linear(lam)
        z = lam * dt
        y = erk_step(rk4, ivp, 0.0, ivp.y0, dt)[0]
        assert y == pytest.approx(sum(z ** j / math.factorial(j) for j in range(5)), rel=1e-14)
