from fractions import Fraction

import pytest

from catalog import get
from conditions import classical_order, wso
from construct import (
    MinimalStageInput,
    construct_minimal,
    family_322,
    parallel_iterated,
    parse_minimal_input,
    v_transform_basic,
)
from core.exceptions import ValidationError
from tableau import export_tableau, exponential_partial_sum, s_reducibility, stability_polynomial


def minimal_input_from(name: str) -> MinimalStageInput:
    entry = get(name)
    t, p, q = entry.tableau, entry.expected.p, entry.expected.q
    return MinimalStageInput.build(
        A22=t.A[1:q, 1:q].tolist(),
        A33=t.A[q:, q:].tolist(),
        c=t.c.tolist(),
        p=p,
        q=q,
    )


@pytest.mark.parametrize(
    "name", ["(3,2,2)", "(4,3,2)", "ERK312", "(5,3,3)", "ERK313", "(6,4,3)", "(7,4,4)", "(8,5,4)", "(9,5,5)"]
)
def test_construction_reproduces_catalog(name):
    result = construct_minimal(minimal_input_from(name))
    assert result.tableau.same_coefficients(get(name).tableau)


def test_construction_322_values():
    spec = MinimalStageInput.build(A22=[[0]], A33=[[0]], c=[0, "1/2", 1], p=2, q=2)
    result = construct_minimal(spec)
    assert result.L.tolist() == [[4]]
    assert result.tableau.b.tolist() == [Fraction(-1, 2), 2, Fraction(-1, 2)]
    assert result.tableau.name == "(3,2,2)"
    assert result.tableau.claimed_wso == 2


def test_construction_matches_closed_form_family():
    spec = MinimalStageInput.build(A22=[[0]], A33=[[0]], c=[0, "1/3", "3/4"], p=2, q=2)
    assert construct_minimal(spec).tableau.same_coefficients(family_322("1/3", "3/4"))


def test_family_322_reference_member(erk322):
    assert family_322("1/2", 1).same_coefficients(erk322)
    with pytest.raises(ValidationError):
        family_322("1/2", "1/2")


def test_constructed_method_properties():
    result = construct_minimal(minimal_input_from("(5,3,3)"))
    t = result.tableau
    assert classical_order(t).verified_order == 3
    assert wso(t).q == 3
    assert stability_polynomial(t).equals(exponential_partial_sum(3))
    assert not s_reducibility(t).reducible


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(A22=[[0]], A33=[[0]], c=[0, "1/2", 1], p=3, q=2),
        dict(A22=[[0]], A33=[[0]], c=["1/4", "1/2", 1], p=2, q=2),
        dict(A22=[[0]], A33=[[0]], c=[0, "1/2", "1/2"], p=2, q=2),
        dict(A22=[[0]], A33=[[1]], c=[0, "1/2", 1], p=2, q=2),
        dict(A22=[], A33=[[0, 0], [1, 0]], c=[0, "1/2", 1], p=3, q=1),
    ],
)
def test_construction_input_validation(kwargs):
    with pytest.raises(ValidationError):
        MinimalStageInput.build(**kwargs)


def test_parse_minimal_input_document():
    spec = parse_minimal_input('{"A22": [["0"]], "A33": [["0"]], "c": ["0", "1/2", "1"], "p": 2, "q": 2}')
    assert spec.s == 3
    with pytest.raises(ValidationError):
        parse_minimal_input({"A22": [["0"]], "c": ["0", "1/2", "1"], "p": 2, "q": 2, "extra": 1})


@pytest.mark.parametrize("p", [2, 3])
def test_basic_method_has_stage_order_p(p):
    nodes = [Fraction(k, p + 1) for k in range(1, p + 2)]
    basic = v_transform_basic(p, nodes)
    for residual in basic.stage_order_residuals():
        assert all(value == 0 for value in residual)


@pytest.mark.parametrize("p", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_parallel_iterated_order_and_wso(p):
    nodes = [Fraction(k, p + 1) for k in range(1, p + 2)]
    t = parallel_iterated(p, nodes)
    assert t.s == p * p
    assert t.name == f"({p * p},{p},{p})"
    assert classical_order(t).verified_order == p
    assert wso(t, order=p).q >= p


def test_parallel_iterated_rejects_bad_nodes():
    with pytest.raises(ValidationError):
        parallel_iterated(2, ["1/2", "1/2", 1])
    with pytest.raises(ValidationError):
        parallel_iterated(3, ["1/2", 1])
    with pytest.raises(ValidationError):
        parallel_iterated(1, [1, "1/2"])


@pytest.mark.parametrize("name", ["(3,2,2)", "(5,3,3)", "(8,5,4)"])
def test_construction_is_deterministic(name):
    first = construct_minimal(minimal_input_from(name))
    second = construct_minimal(minimal_input_from(name))
    assert first.tableau.same_coefficients(second.tableau)
    assert first.L.tolist() == second.L.tolist()
    assert export_tableau(first.tableau) == export_tableau(second.tableau)
