"""Order and weak-stage-order conditions package initialization."""

from conditions.trees import RootedTree, ElementaryWeights, enumerate_trees, trees_of_order, elementary_weight
from conditions.order import OrderReport, classical_order, principal_error_norm
from conditions.wso import (
    WsoAnalysis,
    stage_residual,
    wso,
    wso_rational_residuals,
    krylov_generators,
    dim_output_space,
)
from conditions.audit import (
    StructureAudit,
    NecessaryConditions,
    audit_structure,
    necessary_conditions,
    quadrature_residuals,
    palm_tree_residuals,
    min_stages_table,
)
from conditions.report import verify_report, metadata_mismatches

__all__ = [
    "RootedTree",
    "ElementaryWeights",
    "enumerate_trees",
    "trees_of_order",
    "elementary_weight",
    "OrderReport",
    "classical_order",
    "principal_error_norm",
    "WsoAnalysis",
    "stage_residual",
    "wso",
    "wso_rational_residuals",
    "krylov_generators",
    "dim_output_space",
    "StructureAudit",
    "NecessaryConditions",
    "audit_structure",
    "necessary_conditions",
    "quadrature_residuals",
    "palm_tree_residuals",
    "min_stages_table",
    "verify_report",
    "metadata_mismatches",
]
