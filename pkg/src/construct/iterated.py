"""Parallel-iterated methods of type (p^2, p, p) from a V-transformed basic method."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from core.exceptions import ValidationError
from exact import RMatrix, RationalLike, inverse, matmul, rmatrix, rvector, vandermonde_powers
from tableau.model import Tableau

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ParallelIteratedSpec:
    """Basic method (A~, b~) = (V~ S~ V~^-1, e^T S~ V~^-1) on the nodes c~."""
    p: int
    c_tilde: RMatrix
    basic_A: RMatrix
    basic_b: RMatrix
    S_shift: RMatrix

    def stage_order_residuals(self):
        """A~ c~^(k-1) - c~^k / k for k = 1..p; all zero by construction."""
        residuals = []
        for k in range(1, self.p + 1):
            lhs = matmul(self.basic_A, rvector(x ** (k - 1) for x in self.c_tilde))
            residuals.append([x - y ** k / k for x, y in zip(lhs, self.c_tilde)])
        return residuals


def shift_matrix(p: int) -> RMatrix:
    """(p+1)x(p+1) with subdiagonal 1, 1/2, ..., 1/p."""
    return rmatrix(
        [[Fraction(1, j + 1) if i == j + 1 else 0 for j in range(p + 1)] for i in range(p + 1)],
        cols=p + 1,
    )


def v_transform_basic(p: int, c_tilde: Sequence[RationalLike]) -> ParallelIteratedSpec:
    """
    Basic method with stage order p on p + 1 distinct nodes.

    Raises:
        ValidationError: wrong node count or duplicate nodes.
    """
    nodes = rvector(c_tilde)
    if p < 1:
        raise ValidationError(f"p must be positive, got {p}", field="p")
    if nodes.shape[0] != p + 1:
        raise ValidationError(f"Need {p + 1} abscissae for p={p}, got {nodes.shape[0]}", field="c_tilde")
    if len(set(nodes.tolist())) != p + 1:
        raise ValidationError("Abscissae must be distinct", field="c_tilde")

    V = vandermonde_powers(nodes, 0, p)
    V_inverse = inverse(V)
    S = shift_matrix(p)
    basic_A = matmul(matmul(V, S), V_inverse)
    basic_b = matmul(matmul(rvector([1] * (p + 1)), S), V_inverse)
    return ParallelIteratedSpec(p=p, c_tilde=nodes, basic_A=basic_A, basic_b=basic_b, S_shift=S)


def parallel_iterated(p: int, c_tilde: Sequence[RationalLike], consolidate: bool = True) -> Tableau:
    """
    (p^2, p, p) method: p iterations of the basic method.

    The full method has p blocks of p + 1 stages; the first block is all
    zero stages, so it collapses to one stage whose column carries the row
    sums of A~. ``consolidate=False`` returns the p^2 + p stage form.
    """
    if p < 2:
        raise ValidationError(f"Parallel iteration needs p >= 2, got {p}", field="p")
    basic = v_transform_basic(p, c_tilde)
    m = p + 1
    A_tilde, b_tilde, nodes = basic.basic_A, basic.basic_b, basic.c_tilde

    if consolidate:
        s = 1 + (p - 1) * m
        A = [[Fraction(0)] * s for _ in range(s)]
        for i in range(m):
            A[1 + i][0] = nodes[i]
        for block in range(2, p):
            row0, col0 = 1 + (block - 1) * m, 1 + (block - 2) * m
            for i in range(m):
                for j in range(m):
                    A[row0 + i][col0 + j] = A_tilde[i, j]
        c = [Fraction(0)] + list(nodes) * (p - 1)
    else:
        s = p * m
        A = [[Fraction(0)] * s for _ in range(s)]
        for block in range(1, p):
            row0, col0 = block * m, (block - 1) * m
            for i in range(m):
                for j in range(m):
                    A[row0 + i][col0 + j] = A_tilde[i, j]
        c = [Fraction(0)] * m + list(nodes) * (p - 1)

    b = [Fraction(0)] * (s - m) + list(b_tilde)
    tableau = Tableau.build(A=A, b=b, c=c, name=f"({s},{p},{p})", claimed_order=p, claimed_wso=p)
    logger.info("Constructed %d-stage parallel-iterated method of order %d", s, p)
    return tableau
