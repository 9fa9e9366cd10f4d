"""
Reduced GARK stepping for y' = L y + g(t).

The method's output space Y = span{b, A^T b, ...} has dimension d <= s; the
step below needs only d applications of L while reproducing the original
explicit RK step exactly in exact arithmetic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

import numpy as np

from conditions.wso import dim_output_space
from core.exceptions import ValidationError
from exact import RMatrix, matmul, rmatrix, rvector, to_float
from tableau.model import Tableau
from timestep.erk import check_finite
from timestep.ivp import LinearIVP

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GarkScheme:
    """Binary64 GARK coefficients; A_hat couples L Y_j, A_breve the forcing samples."""
    d: int
    A_hat: np.ndarray
    A_breve: np.ndarray
    b_hat: np.ndarray
    b_breve: np.ndarray
    c: np.ndarray
    name: str = ""

    @property
    def s(self) -> int:
        return int(self.c.shape[0])


def output_rows(tableau: Tableau, count: int) -> List[RMatrix]:
    """[b^T, b^T A, ..., b^T A^(count-1)] exactly."""
    rows = [tableau.b]
    for _ in range(count - 1):
        rows.append(matmul(rows[-1], tableau.A))
    return rows


def exact_gark_coefficients(tableau: Tableau):
    """(d, A_hat, A_breve) in exact arithmetic."""
    if sum(tableau.b, Fraction(0)) != 1:
        raise ValidationError(
            f"{tableau.name or 'tableau'} is not consistent (b^T e != 1)", field="b"
        )
    d = dim_output_space(tableau)
    rows = output_rows(tableau, d)
    row_sums = [sum(row, Fraction(0)) for row in rows]

    A_hat = [[Fraction(0)] * d for _ in range(d)]
    A_breve = [[Fraction(0)] * tableau.s]
    if d >= 2:
        A_hat[1][0] = row_sums[d - 1]
    for i in range(3, d + 1):
        A_hat[i - 1][0] = row_sums[d - i + 1] - 1
        A_hat[i - 1][i - 2] = Fraction(1)
    for i in range(2, d + 1):
        A_breve.append(list(rows[d - i + 1]))
    return d, rmatrix(A_hat, d), rmatrix(A_breve, tableau.s)


def gark_coefficients(tableau: Tableau) -> GarkScheme:
    """
    GARK form of an explicit RK method applied to y' = L y + g(t).

    Args:
        tableau: explicit method of classical order >= 1

    Returns:
        GarkScheme: d = dim Y stages; b_hat = e_d, b_breve = b

    Raises:
        ValidationError: b^T e != 1
    """
    d, A_hat, A_breve = exact_gark_coefficients(tableau)
    b_hat = rvector([0] * (d - 1) + [1])
    scheme = GarkScheme(
        d=d,
        A_hat=to_float(A_hat),
        A_breve=to_float(A_breve),
        b_hat=to_float(b_hat),
        b_breve=to_float(tableau.b),
        c=to_float(tableau.c),
        name=tableau.name,
    )
    logger.debug("%s: GARK form with d=%d of s=%d", tableau.name, d, tableau.s)
    return scheme


class GarkIntegrator:
    """Fixed-step integrator for LinearIVP using the reduced GARK form."""

    def __init__(self, tableau: Tableau):
        self.tableau = tableau
        self.scheme = gark_coefficients(tableau)

    @property
    def name(self) -> str:
        return self.tableau.name

    def step(self, ivp: LinearIVP, t_n: float, y_n: np.ndarray, dt: float) -> np.ndarray:
        return gark_step(self.scheme, ivp, t_n, y_n, dt)


def gark_step(scheme: GarkScheme, ivp: LinearIVP, t_n: float, y_n: np.ndarray, dt: float) -> np.ndarray:
    """
    One GARK step: s forcing samples, d applications of L.

    Y_i = y_n + dt sum_{j<i} A_hat[i,j] L Y_j + dt sum_j A_breve[i,j] g(t_n + c_j dt)
    y_{n+1} = y_n + dt sum_i b_hat[i] L Y_i + dt sum_j b_breve[j] g(t_n + c_j dt)

    Raises:
        ValidationError: dt is not positive.
        BlowUpError: the new state is not finite.
    """
    if not dt > 0:
        raise ValidationError(f"Step size must be positive, got {dt}", field="dt")
    y_n = np.asarray(y_n, dtype=np.float64)
    forcing_samples = np.array([ivp.g(t_n + c_j * dt) for c_j in scheme.c], dtype=np.float64)
    forcing = np.tensordot(scheme.A_breve, forcing_samples, axes=1)

    LY = np.zeros((scheme.d,) + y_n.shape)
    for i in range(scheme.d):
        stage = y_n + dt * forcing[i]
        if i:
            stage = stage + dt * np.tensordot(scheme.A_hat[i, :i], LY[:i], axes=1)
        LY[i] = ivp.apply(stage)

    y_next = (
        y_n
        + dt * np.tensordot(scheme.b_hat, LY, axes=1)
        + dt * np.tensordot(scheme.b_breve, forcing_samples, axes=1)
    )
    return check_finite(y_next, t_n + dt)
