"""Structural analyses that depend only on (A, b, c)."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from numpy.polynomial import Polynomial

from config.settings import WsoConfig
from core.exceptions import ValidationError
from exact import matmul
from tableau.model import StabilityPolynomial, Tableau

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientMetrics:
    D: Fraction
    min_entry: Fraction
    abscissas_in_unit_interval: bool


@dataclass(frozen=True)
class NonnegativityReport:
    A_nonneg: bool
    b_nonneg: bool


def stability_polynomial(tableau: Tableau) -> StabilityPolynomial:
    """R(z) = 1 + sum_j b^T A^(j-1) e z^j, exactly."""
    coeffs = [Fraction(1)]
    vector = tableau.e
    for _ in range(tableau.s):
        coeffs.append(sum((w * v for w, v in zip(tableau.b, vector)), Fraction(0)))
        vector = matmul(tableau.A, vector)
    return StabilityPolynomial(tuple(coeffs))


def coefficient_metrics(tableau: Tableau) -> CoefficientMetrics:
    entries = list(tableau.A.ravel()) + list(tableau.b)
    magnitude = max(abs(value) for value in entries + list(tableau.c))
    return CoefficientMetrics(
        D=magnitude,
        min_entry=min(entries),
        abscissas_in_unit_interval=all(0 <= value <= 1 for value in tableau.c),
    )


def nonnegativity_report(tableau: Tableau) -> NonnegativityReport:
    return NonnegativityReport(
        A_nonneg=all(value >= 0 for value in tableau.A.ravel()),
        b_nonneg=all(value >= 0 for value in tableau.b),
    )


def linear_ssp_coefficient(polynomial: StabilityPolynomial, tolerance: float = None) -> float:
    """
    Radius of absolute monotonicity of R.

    The largest r >= 0 with R^(k)(-r) >= 0 for every k, found by bisection.
    The feasible set is an interval starting at 0, bounded above by
    a_(m-1) / (m a_m) from the linear derivative R^(m-1).

    Raises:
        ValidationError: R is constant.
    """
    tolerance = tolerance or WsoConfig.SSP_TOLERANCE
    coeffs = polynomial.trimmed()
    degree = len(coeffs) - 1
    if degree < 1:
        raise ValidationError("Linear SSP coefficient needs deg R >= 1", field="R")
    if any(value < 0 for value in coeffs):
        return 0.0

    upper = float(coeffs[degree - 1] / (degree * coeffs[degree]))
    if upper == 0.0:
        return 0.0

    derivatives = [Polynomial([float(value) for value in coeffs])]
    for _ in range(degree):
        derivatives.append(derivatives[-1].deriv())

    def absolutely_monotone(r: float) -> bool:
        return all(d(-r) >= -1e-14 for d in derivatives)

    if absolutely_monotone(upper):
        return upper

    low, high = 0.0, upper
    while high - low > tolerance:
        middle = 0.5 * (low + high)
        if absolutely_monotone(middle):
            low = middle
        else:
            high = middle
    logger.debug("Linear SSP coefficient %.15g (degree %d)", low, degree)
    return low


def exponential_partial_sum(p: int) -> StabilityPolynomial:
    """sum_{j<=p} z^j / j!"""
    coeffs = [Fraction(1)]
    for j in range(1, p + 1):
        coeffs.append(coeffs[-1] / j)
    return StabilityPolynomial(tuple(coeffs))


def polynomial_from(coeffs: Sequence) -> StabilityPolynomial:
    return StabilityPolynomial(tuple(Fraction(value) for value in coeffs))
