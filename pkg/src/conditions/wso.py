"""Weak stage order through Krylov-space orthogonality."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from conditions.order import classical_order
from core.exceptions import ValidationError
from exact import RMatrix, column_stack, matmul, rank, rvector
from tableau.model import Tableau

logger = logging.getLogger(__name__)


@dataclass
class WsoAnalysis:
    """
    WSO of a tableau with the Krylov dimensions behind it.

    ``q`` is exact unless ``q_lower_bound`` is set; ``infinite`` marks the
    sufficient condition for unbounded WSO.
    """
    q: int
    infinite: bool = False
    q_lower_bound: bool = False
    residual_vectors: List[RMatrix] = field(default_factory=list)
    dim_K_q: int = 0
    dim_Y: int = 0
    orthogonal: bool = True
    bound_ok: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "q": "inf" if self.infinite else self.q,
            "q_lower_bound": self.q_lower_bound,
            "dim_K_q": self.dim_K_q,
            "dim_Y": self.dim_Y,
            "orthogonal": self.orthogonal,
            "bound_ok": self.bound_ok,
        }


def _dot(u, v) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def _power(vector, k: int) -> RMatrix:
    return rvector(value ** k for value in vector)


def stage_residual(k: int, tableau: Tableau) -> RMatrix:
    """tau^(k) = A c^(k-1) - c^k / k, exactly."""
    if k < 1:
        raise ValidationError(f"Stage residual index must be >= 1, got {k}", field="k")
    return rvector(
        x - y / k for x, y in zip(matmul(tableau.A, _power(tableau.c, k - 1)), _power(tableau.c, k))
    )


def krylov_vectors(tableau: Tableau, vector: RMatrix, transpose: bool = False) -> List[RMatrix]:
    """[v, A v, ..., A^(s-1) v] (or with A^T)."""
    matrix = tableau.A.T if transpose else tableau.A
    vectors = [vector]
    for _ in range(tableau.s - 1):
        vectors.append(matmul(matrix, vectors[-1]))
    return vectors


def wso_rational_residuals(tableau: Tableau, k: int) -> List[Fraction]:
    """
    Coefficients of b^T (I - zA)^(-1) tau^(k) as a polynomial in z.

    A is nilpotent, so the series stops at z^(s-1): coefficient i is
    b^T A^i tau^(k).
    """
    return [_dot(tableau.b, v) for v in krylov_vectors(tableau, stage_residual(k, tableau))]


def krylov_generators(tableau: Tableau, q: int) -> List[RMatrix]:
    """Generators A^i tau^(j) of K_q, j = 2..q."""
    return [v for j in range(2, q + 1) for v in krylov_vectors(tableau, stage_residual(j, tableau))]


def dim_output_space(tableau: Tableau) -> int:
    """dim Y, Y = span{b, A^T b, ...}."""
    return rank(column_stack(krylov_vectors(tableau, tableau.b, transpose=True), tableau.s))


def wso(tableau: Tableau, order: Optional[int] = None) -> WsoAnalysis:
    """
    Weak stage order of an explicit tableau.

    For k = 2..n_c the residual tau^(k) is tested against b under every
    power of A; the first failure gives q = k - 1. When nothing fails, q = n_c
    is only a lower bound, and ``infinite`` is set if b^T A = 0 and
    b^T c^m = 0 for 1 <= m < n_c.

    Args:
        tableau: method to analyse
        order: classical order, computed when omitted (used for bound_ok)
    """
    n_c = tableau.distinct_abscissas()
    residuals = [stage_residual(1, tableau)]
    q = None
    for k in range(2, n_c + 1):
        residuals.append(stage_residual(k, tableau))
        if any(value != 0 for value in wso_rational_residuals(tableau, k)):
            q = k - 1
            break

    lower_bound = q is None
    infinite = False
    if lower_bound:
        q = n_c
        infinite = all(value == 0 for value in matmul(tableau.b, tableau.A)) and all(
            _dot(tableau.b, _power(tableau.c, m)) == 0 for m in range(1, n_c)
        )

    generators = krylov_generators(tableau, q)
    analysis = WsoAnalysis(
        q=q,
        infinite=infinite,
        q_lower_bound=lower_bound,
        residual_vectors=residuals,
        dim_K_q=rank(column_stack(generators, tableau.s)) if generators else 0,
        dim_Y=dim_output_space(tableau),
        orthogonal=all(_dot(tableau.b, v) == 0 for v in generators),
    )

    if order is None:
        order = classical_order(tableau).verified_order
    analysis.bound_ok = True if order < 2 or infinite else order + q <= tableau.s + 1

    logger.debug(
        "%s: q=%s%s dim_K=%d dim_Y=%d",
        tableau.name, q, "+" if lower_bound else "", analysis.dim_K_q, analysis.dim_Y,
    )
    return analysis
