from fractions import Fraction
from math import factorial

import pytest

from catalog import get
from conditions import (
    audit_structure,
    classical_order,
    elementary_weight,
    enumerate_trees,
    min_stages_table,
    necessary_conditions,
    palm_tree_residuals,
    quadrature_residuals,
    stage_residual,
    trees_of_order,
    verify_report,
    wso,
    wso_rational_residuals,
)
from conditions.trees import LEAF, RootedTree
from core.exceptions import CapExceededError, ValidationError
from exact import matmul, matrix_power
from tableau import Tableau
from utils.helpers import same_significant


@pytest.mark.parametrize("order, count", [(1, 1), (2, 1), (3, 2), (4, 4), (5, 9), (6, 20), (7, 48), (8, 115)])
def test_tree_counts(order, count):
    assert len(trees_of_order(order)) == count


def test_enumerate_trees_total_and_cap():
    assert len(enumerate_trees(4)) == 8
    with pytest.raises(CapExceededError):
        enumerate_trees(9)


def test_tree_density_and_symmetry():
    bushy = RootedTree.from_children([LEAF, LEAF])
    tall = RootedTree.from_children([RootedTree.from_children([LEAF])])
    assert (bushy.order, bushy.density, bushy.symmetry) == (3, 3, 2)
    assert (tall.order, tall.density, tall.symmetry) == (3, 6, 1)
    assert LEAF.density == 1 and LEAF.symmetry == 1


def test_isomorphic_trees_compare_equal():
    a = RootedTree.from_children([LEAF, RootedTree.from_children([LEAF])])
    b = RootedTree.from_children([RootedTree.from_children([LEAF]), LEAF])
    assert a == b
    assert hash(a) == hash(b)


@pytest.mark.parametrize("order", range(1, 7))
def test_sum_of_inverse_symmetries(order):
    # monotone labellings alpha(t) = n! / (gamma sigma) sum to (n-1)!
    total = sum(Fraction(1, tree.density * tree.symmetry) for tree in trees_of_order(order))
    assert total * Fraction(factorial(order)) == factorial(order - 1)


def test_elementary_weights_of_rk4(rk4):
    for tree in enumerate_trees(4):
        assert elementary_weight(tree, rk4) == Fraction(1, tree.density)


@pytest.mark.parametrize(
    "name, order",
    [("euler", 1), ("(3,2,2)", 2), ("ssprk3", 3), ("rk4", 4), ("(5,3,3)", 3), ("dopri5", 5)],
)
def test_classical_order(name, order):
    assert classical_order(get(name).tableau).verified_order == order


def test_principal_error_of_322(erk322):
    report = classical_order(erk322)
    assert same_significant(report.principal_error, 0.2357)
    assert report.D == 2
    assert report.failing_trees


def test_classical_order_cap(rk4):
    report = classical_order(rk4, cap=2)
    assert report.verified_order == 2
    assert report.hit_cap
    with pytest.raises(CapExceededError):
        classical_order(rk4, cap=9)


@pytest.mark.parametrize("cap", [0, -1])
def test_classical_order_rejects_cap_below_one(rk4, cap):
    with pytest.raises(ValidationError):
        classical_order(rk4, cap=cap)


def test_classical_order_cap_one(rk4):
    report = classical_order(rk4, cap=1)
    assert report.verified_order == 1
    assert report.hit_cap


def test_stage_residual_first_is_zero(erk533):
    assert all(v == 0 for v in stage_residual(1, erk533))
    with pytest.raises(ValidationError):
        stage_residual(0, erk533)


def test_stage_residual_322(erk322):
    assert stage_residual(2, erk322).tolist() == [0, Fraction(-1, 8), Fraction(-1, 2)]


@pytest.mark.parametrize("name, q", [("(3,2,2)", 2), ("(5,3,3)", 3), ("rk4", 1), ("ssprk3", 1), ("(4,3,2)", 2)])
def test_wso_examples(name, q):
    analysis = wso(get(name).tableau)
    assert analysis.q == q
    assert not analysis.infinite


def test_wso_of_euler_is_infinite(euler):
    analysis = wso(euler)
    assert analysis.infinite
    assert analysis.to_dict()["q"] == "inf"
    assert analysis.bound_ok


def test_wso_minimal_stage_dimensions(erk322, erk533):
    for t, p, q in ((erk322, 2, 2), (erk533, 3, 3)):
        analysis = wso(t)
        assert analysis.dim_Y == p
        assert analysis.dim_K_q == q - 1
        assert analysis.orthogonal
        assert analysis.bound_ok


def test_rational_residuals_match_direct_powers(erk533):
    tau = stage_residual(4, erk533)
    direct = [
        sum((w * v for w, v in zip(erk533.b, matmul(matrix_power(erk533.A, i), tau))), Fraction(0))
        for i in range(erk533.s)
    ]
    assert wso_rational_residuals(erk533, 4) == direct
    assert any(value != 0 for value in direct)


@pytest.mark.parametrize("seed", range(20))
def test_wso_agrees_with_rational_condition(seed, rng, random_tableau):
    rng.seed(seed)
    t = random_tableau(rng, rng.randint(2, 5))
    analysis = wso(t, order=0)
    for k in range(2, analysis.q + 1):
        assert all(value == 0 for value in wso_rational_residuals(t, k))
    if not analysis.q_lower_bound:
        assert any(value != 0 for value in wso_rational_residuals(t, analysis.q + 1))


@pytest.mark.parametrize("seed", range(20))
def test_structure_audit_holds_for_random_tableaus(seed, rng, random_tableau):
    rng.seed(seed)
    audit = audit_structure(random_tableau(rng, rng.randint(1, 5)))
    assert audit.holds, audit.relations


def test_structure_audit_equality_case(erk533):
    audit = audit_structure(erk533)
    assert audit.holds
    assert (audit.p, audit.q, audit.s, audit.deg_R, audit.dim_Y, audit.dim_K_q) == (3, 3, 5, 3, 3, 2)
    assert audit.relations["p + q <= s + 1"]


def test_necessary_conditions_322(erk322):
    result = necessary_conditions(erk322, 2)
    assert result.all_hold
    assert result.L.tolist() == [[4]]
    assert result.beta.tolist() == [Fraction(-1, 2), Fraction(-1, 2)]


def test_necessary_conditions_fail_for_rk4(rk4):
    result = necessary_conditions(rk4, 2)
    assert not result.all_hold


def test_necessary_conditions_q_range(erk322):
    with pytest.raises(ValidationError):
        necessary_conditions(erk322, 1)


def test_quadrature_and_palm_tree_residuals(rk4, erk533):
    assert all(r == 0 for r in quadrature_residuals(rk4, 4))
    assert all(r == 0 for r in palm_tree_residuals(rk4, 4).values())
    assert all(r == 0 for r in palm_tree_residuals(erk533, 3).values())
    assert quadrature_residuals(rk4, 5)[-1] != 0


def test_min_stages_table():
    table = {(row["p"], row["q"]): row for row in min_stages_table()}
    assert table[(3, 3)]["min_stages"] == 5
    assert table[(3, 3)]["ode_natural"]
    assert table[(4, 3)]["pde_natural"]
    assert table[(5, 1)]["min_stages"] == 6
    assert table[(4, 4)]["min_stages"] == 7
    assert table[(2, 1)]["min_stages"] == 2


@pytest.mark.parametrize("seed", range(10))
def test_nonnegative_tableaus_lack_high_order_and_wso(seed, rng, random_tableau):
    rng.seed(1000 + seed)
    for _ in range(100):
        t = random_tableau(rng, rng.randint(2, 5), nonnegative=True, denominator=4)
        if classical_order(t, cap=2).verified_order < 2:
            continue
        assert wso(t, order=2).q < 2


def test_verify_report_fields(erk533):
    report = verify_report(erk533)
    assert report["order"] == 3
    assert report["wso"] == 3
    assert report["dim_Y"] == 3
    assert report["dim_K_q"] == 2
    assert report["linear_ssp"] == pytest.approx(1.0, abs=1e-9)
    assert report["bounds"]["holds"]
    assert report["necessary_conditions"]["all_hold"]
    assert report["mismatches"] == []
    assert report["spec_version"]


def test_verify_report_flags_wrong_claims():
    t = Tableau.build(A=[[0, 0], ["1/2", 0]], b=[0, 1], claimed_order=3, claimed_wso=2)
    report = verify_report(t, exact=True)
    assert report["order"] == 2
    assert len(report["mismatches"]) == 2
    assert report["stability_coeffs"] == ["1", "1", "1/2"]


@pytest.mark.parametrize("name, order", [("(3,2,2)", [2, 0, 1]), ("RK4", [3, 1, 0, 2]), ("(5,3,3)", [4, 3, 2, 1, 0])])
def test_classical_order_invariant_under_stage_relabelling(name, order):
    t = get(name).tableau
    relabelled = t.permuted(order)
    original, permuted = classical_order(t), classical_order(relabelled)
    assert permuted.verified_order == original.verified_order
    assert permuted.principal_error == pytest.approx(original.principal_error, rel=1e-15)
    assert permuted.D == original.D
