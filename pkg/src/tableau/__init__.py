"""Tableau package initialization."""

from tableau.model import Tableau, StabilityPolynomial, ReducibilityCertificate
from tableau.analysis import (
    CoefficientMetrics,
    NonnegativityReport,
    stability_polynomial,
    coefficient_metrics,
    nonnegativity_report,
    linear_ssp_coefficient,
    exponential_partial_sum,
    polynomial_from,
)
from tableau.reducibility import s_reducibility, reduce_by_certificate, partition_matrix
from tableau.io import TableauDocument, parse_tableau, tableau_document, export_tableau

__all__ = [
    "Tableau",
    "StabilityPolynomial",
    "ReducibilityCertificate",
    "CoefficientMetrics",
    "NonnegativityReport",
    "stability_polynomial",
    "coefficient_metrics",
    "nonnegativity_report",
    "linear_ssp_coefficient",
    "exponential_partial_sum",
    "polynomial_from",
    "s_reducibility",
    "reduce_by_certificate",
    "partition_matrix",
    "TableauDocument",
    "parse_tableau",
    "tableau_document",
    "export_tableau",
]
