"""Structural audits: dimension chain, stage bound and necessary conditions."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Any, Dict, List, Optional

from conditions.order import classical_order
from conditions.wso import WsoAnalysis, wso
from core.exceptions import SpectraOverlapError, ValidationError
from exact import (
    RMatrix,
    as_rmatrix,
    inverse,
    matmul,
    rmatrix,
    rvector,
    solve_sylvester,
    vandermonde_powers,
)
from tableau.analysis import stability_polynomial
from tableau.model import Tableau
from utils.helpers import fraction_text

logger = logging.getLogger(__name__)


@dataclass
class StructureAudit:
    """Each relation maps to whether it holds."""
    p: int
    q: int
    s: int
    deg_R: int
    dim_Y: int
    dim_K_q: int
    relations: Dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.relations.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "q": self.q,
            "s": self.s,
            "deg_R": self.deg_R,
            "dim_Y": self.dim_Y,
            "dim_K_q": self.dim_K_q,
            "chain": f"{self.p} <= {self.deg_R} <= {self.dim_Y} <= {self.s} - {self.dim_K_q}",
            "relations": dict(self.relations),
            "holds": self.holds,
        }


def audit_structure(
    tableau: Tableau,
    order: Optional[int] = None,
    analysis: Optional[WsoAnalysis] = None,
) -> StructureAudit:
    """
    Evaluate p <= deg R <= dim Y <= s - dim K_q and the stage bound.

    The stage bound p + q <= s + 1 and q < n_c are only asserted for p >= 2;
    dim K_q >= q - 1 always.
    """
    p = classical_order(tableau).verified_order if order is None else order
    analysis = analysis or wso(tableau, order=p)
    deg_R = stability_polynomial(tableau).degree
    s = tableau.s
    q = analysis.q

    relations = {
        "p <= deg R": p <= deg_R,
        "deg R <= dim Y": deg_R <= analysis.dim_Y,
        "dim Y <= s - dim K_q": analysis.dim_Y <= s - analysis.dim_K_q,
        "dim K_q >= q - 1": analysis.dim_K_q >= q - 1,
        "K_q orthogonal to Y": analysis.orthogonal,
    }
    if p >= 2 and not analysis.infinite:
        relations["p + q <= s + 1"] = p + q <= s + 1
        relations["q < n_c"] = q < tableau.distinct_abscissas()

    audit = StructureAudit(p=p, q=q, s=s, deg_R=deg_R, dim_Y=analysis.dim_Y,
                           dim_K_q=analysis.dim_K_q, relations=relations)
    if not audit.holds:
        logger.warning("%s: structural relation violated: %s", tableau.name,
                       [name for name, ok in relations.items() if not ok])
    return audit


@dataclass
class NecessaryConditions:
    """Outcome of the four necessary conditions for WSO q."""
    q: int
    distinct_abscissas: bool
    sylvester: bool
    weights_form: bool
    corner_zero: bool
    L: Optional[RMatrix] = None
    beta: Optional[RMatrix] = None

    @property
    def all_hold(self) -> bool:
        return self.distinct_abscissas and self.sylvester and self.weights_form and self.corner_zero

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "a_distinct_abscissas": self.distinct_abscissas,
            "b_sylvester": self.sylvester,
            "c_weights_form": self.weights_form,
            "d_corner_zero": self.corner_zero,
            "all_hold": self.all_hold,
            "L": None if self.L is None else [[fraction_text(v) for v in row] for row in self.L.tolist()],
            "beta": None if self.beta is None else [fraction_text(v) for v in self.beta],
        }


def scaled_powers(values, first_power: int, last_power: int) -> RMatrix:
    """Columns values^k / k for k = first_power..last_power."""
    V = vandermonde_powers(values, first_power, last_power)
    return rmatrix(
        [[entry / (first_power + j) for j, entry in enumerate(row)] for row in V.tolist()],
        cols=V.shape[1],
    )


def sylvester_data(c: RMatrix, A33: RMatrix, q: int):
    """
    P, Q, C of the first Sylvester equation A33 L - L W_U V_U^-1 = (A33 V_L - W_L) V_U^-1.

    Returns None when V_U is singular.
    """
    c_U, c_L = c[1:q], c[q:]
    V_U_inverse = inverse(vandermonde_powers(c_U, 1, q - 1))
    if V_U_inverse is None:
        return None
    W_U = scaled_powers(c_U, 2, q)
    V_L = vandermonde_powers(c_L, 1, q - 1)
    W_L = scaled_powers(c_L, 2, q)
    Q = matmul(W_U, V_U_inverse)
    C = matmul(as_rmatrix(matmul(A33, V_L) - W_L), V_U_inverse)
    return A33, Q, C


def necessary_conditions(tableau: Tableau, q: int) -> NecessaryConditions:
    """
    Check the four necessary conditions for WSO q with dim K_q = q - 1.

    Rows split as 1 | 2..q | q+1..s. A singular V_U is reported as a failed
    distinct-abscissa condition, not raised.

    Raises:
        ValidationError: q outside 2..s.
    """
    s = tableau.s
    if not 2 <= q <= s:
        raise ValidationError(f"q must lie in 2..{s}, got {q}", field="q")

    A, b, c = tableau.A, tableau.b, tableau.c
    head = c[: q + 1].tolist()
    distinct = len(set(head)) == len(head)
    corner_zero = q >= s or A[q, q - 1] == 0

    A22 = as_rmatrix(A[1:q, 1:q])
    A32 = as_rmatrix(A[q:, 1:q])
    A33 = as_rmatrix(A[q:, q:])
    result = NecessaryConditions(q=q, distinct_abscissas=distinct, sylvester=False,
                                 weights_form=False, corner_zero=corner_zero)
    if not distinct:
        return result

    data = sylvester_data(c, A33, q)
    if data is None:
        result.distinct_abscissas = False
        return result
    try:
        L = solve_sylvester(*data)
    except SpectraOverlapError:
        return result

    second = as_rmatrix(matmul(L, A22) - matmul(A33, L))
    result.L = L
    result.sylvester = all(x == y for x, y in zip(second.ravel(), A32.ravel()))

    beta_rest = rvector(b[q:].tolist())
    expected_upper = -matmul(L.T, beta_rest) if s > q else rvector([0] * (q - 1))
    result.weights_form = all(x == y for x, y in zip(b[1:q], expected_upper))
    if result.weights_form:
        result.beta = rvector([b[0]] + beta_rest.tolist())

    logger.debug("%s: necessary conditions for q=%d -> %s", tableau.name, q, result.to_dict())
    return result


def quadrature_residuals(tableau: Tableau, p: int) -> List[Fraction]:
    """b^T c^(j-1) - 1/j for j = 1..p."""
    return [
        sum((w * x ** (j - 1) for w, x in zip(tableau.b, tableau.c)), Fraction(0)) - Fraction(1, j)
        for j in range(1, p + 1)
    ]


def palm_tree_residuals(tableau: Tableau, p: int) -> Dict[tuple, Fraction]:
    """b^T A^k c^j - 1/((k+j+1)...(j+1)) for j + k <= p - 1, keyed by (k, j)."""
    residuals = {}
    for j in range(p):
        vector = rvector(x ** j for x in tableau.c)
        for k in range(p - j):
            value = sum((w * v for w, v in zip(tableau.b, vector)), Fraction(0))
            residuals[(k, j)] = value - Fraction(1, prod(range(j + 1, k + j + 2)))
            vector = matmul(tableau.A, vector)
    return residuals


CLASSICAL_MIN_STAGES = {1: 1, 2: 2, 3: 3, 4: 4, 5: 6}


def min_stages_table(max_p: int = 5, max_q: int = 5) -> List[Dict[str, Any]]:
    """
    Lower bounds on the stage count for order p and WSO q.

    q = 1 uses the classical minimum stage counts; q >= 2 uses s >= p + q - 1.
    Cells with q = p or q = p - 1 are flagged.
    """
    rows = []
    for p in range(2, max_p + 1):
        for q in range(1, max_q + 1):
            if q == 1:
                bound = CLASSICAL_MIN_STAGES.get(p)
            else:
                bound = max(p + q - 1, CLASSICAL_MIN_STAGES.get(p, p))
            rows.append({
                "p": p,
                "q": q,
                "min_stages": bound,
                "ode_natural": q == p,
                "pde_natural": q == p - 1,
            })
    return rows
