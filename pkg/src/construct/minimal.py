"""Minimal-stage schemes (p + q = s + 1) by the parametric solution."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from conditions.audit import sylvester_data
from core.exceptions import SingularSystemError, ValidationError
from exact import (
    RMatrix,
    RationalLike,
    as_rmatrix,
    matmul,
    ones,
    rmatrix,
    rvector,
    solve_linear,
    solve_sylvester,
    to_rational,
)
from tableau.model import Tableau

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MinimalStageInput:
    """
    Free parameters (A22, A33, c) of a minimal-stage scheme.

    A22 is (q-1)x(q-1), A33 is (s-q)x(s-q), both strictly lower triangular.
    """
    A22: RMatrix
    A33: RMatrix
    c: RMatrix
    p: int
    q: int

    @classmethod
    def build(
        cls,
        A22: Sequence[Sequence[RationalLike]],
        A33: Sequence[Sequence[RationalLike]],
        c: Sequence[RationalLike],
        p: int,
        q: int,
    ) -> "MinimalStageInput":
        """
        Validate construction inputs.

        Raises:
            ValidationError: shapes, explicitness or abscissa constraints fail.
        """
        abscissas = rvector(c)
        s = abscissas.shape[0]
        if q < 2:
            raise ValidationError(f"Construction needs q >= 2, got {q}", field="q")
        if p + q != s + 1:
            raise ValidationError(f"Need p + q = s + 1, got p={p}, q={q}, s={s}", field="c")
        if q < p - 1:
            raise ValidationError(f"Need q >= p - 1, got p={p}, q={q}", field="q")
        if abscissas[0] != 0:
            raise ValidationError("c_1 must be 0", field="c")
        head = abscissas[: q + 1].tolist()
        if len(set(head)) != len(head):
            raise ValidationError(f"c_1..c_{q + 1} must be distinct", field="c")

        blocks = {}
        for label, rows, size in (("A22", A22, q - 1), ("A33", A33, s - q)):
            rows = [list(row) for row in rows] or [[0] * size for _ in range(size)]
            matrix = rmatrix(rows, cols=size)
            if matrix.shape != (size, size):
                raise ValidationError(f"{label} must be {size}x{size}, got {matrix.shape}", field=label)
            if any(matrix[i, j] != 0 for i in range(size) for j in range(i, size)):
                raise ValidationError(f"{label} must be strictly lower triangular", field=label)
            blocks[label] = matrix

        return cls(A22=blocks["A22"], A33=blocks["A33"], c=abscissas, p=p, q=q)

    @property
    def s(self) -> int:
        return self.c.shape[0]


@dataclass(frozen=True, eq=False)
class ConstructionResult:
    tableau: Tableau
    L: RMatrix
    beta: RMatrix


def weight_map(L: RMatrix) -> RMatrix:
    """The s x (s-q+1) matrix [[1, 0], [0, -L^T], [0, I]] mapping beta to b."""
    m, n = L.shape
    rows = [[1] + [0] * m]
    rows += [[0] + [-L[k, i] for k in range(m)] for i in range(n)]
    rows += [[0] + [int(k == i) for k in range(m)] for i in range(m)]
    return rmatrix(rows, cols=m + 1)


def construct_minimal(spec: MinimalStageInput) -> ConstructionResult:
    """
    Build the (s, p, q) scheme determined by (A22, A33, c).

    Solves the first Sylvester equation for L, sets A32 = L A22 - A33 L,
    fills the first column from stage consistency, then picks the weights
    from the p quadrature conditions.

    Raises:
        SpectraOverlapError: the Sylvester equation for L is singular.
        SingularSystemError: the quadrature system is singular for these abscissas.
    """
    s, p, q = spec.s, spec.p, spec.q
    c = spec.c
    data = sylvester_data(c, spec.A33, q)
    if data is None:
        raise ValidationError("V_U is singular: c_2..c_q must be distinct and nonzero", field="c")
    L = solve_sylvester(*data)

    A22, A33 = spec.A22, spec.A33
    A32 = as_rmatrix(matmul(L, A22) - matmul(A33, L))
    A21 = rvector(x - y for x, y in zip(c[1:q], matmul(A22, ones(q - 1))))
    A31 = rvector(
        x - y - z for x, y, z in zip(c[q:], matmul(A32, ones(q - 1)), matmul(A33, ones(s - q)))
    )

    A = [[Fraction(0)] * s for _ in range(s)]
    for i in range(q - 1):
        A[1 + i][0] = A21[i]
        for j in range(q - 1):
            A[1 + i][1 + j] = A22[i, j]
    for i in range(s - q):
        A[q + i][0] = A31[i]
        for j in range(q - 1):
            A[q + i][1 + j] = A32[i, j]
        for j in range(s - q):
            A[q + i][q + j] = A33[i, j]

    B = weight_map(L)
    moments = rmatrix([[x ** k for x in c] for k in range(p)], cols=s)
    beta = solve_linear(matmul(moments, B), [Fraction(1, k) for k in range(1, p + 1)])
    if beta is None:
        raise SingularSystemError(
            "quadrature system singular for these abscissas", operation="construct_minimal"
        )
    b = matmul(B, beta)

    tableau = Tableau.build(A=A, b=b, c=c, name=f"({s},{p},{q})", claimed_wso=q)
    logger.info("Constructed %s minimal-stage scheme", tableau.name)
    return ConstructionResult(tableau=tableau, L=L, beta=beta)


def family_322(c2: RationalLike, c3: RationalLike) -> Tableau:
    """Closed-form (3,2,2) family in the abscissas c2 != c3, both nonzero."""
    c2, c3 = to_rational(c2), to_rational(c3)
    if c2 == 0 or c3 == 0 or c2 == c3:
        raise ValidationError("Need distinct nonzero c2, c3", field="c")
    b = [
        1 - 1 / (2 * c2) - 1 / (2 * c3),
        c3 / (2 * c2 * (c3 - c2)),
        c2 / (2 * c3 * (c2 - c3)),
    ]
    return Tableau.build(A=[[0, 0, 0], [c2, 0, 0], [c3, 0, 0]], b=b, name="(3,2,2)", claimed_order=2, claimed_wso=2)
