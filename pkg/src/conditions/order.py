"""Classical order verification over rooted trees."""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from config.settings import WsoConfig
from core.exceptions import CapExceededError, ValidationError
from conditions.trees import ElementaryWeights, RootedTree, trees_of_order
from tableau.analysis import coefficient_metrics
from tableau.model import Tableau

logger = logging.getLogger(__name__)


@dataclass
class OrderReport:
    """Verified classical order with the order-(p+1) residuals."""
    verified_order: int
    failing_trees: List[Tuple[RootedTree, Fraction]] = field(default_factory=list)
    principal_error: Optional[float] = None
    D: Fraction = Fraction(0)
    hit_cap: bool = False

    def to_dict(self) -> dict:
        return {
            "order": self.verified_order,
            "principal_error": self.principal_error,
            "hit_cap": self.hit_cap,
            "failing_trees": [
                {"tree": str(tree), "residual": str(residual)} for tree, residual in self.failing_trees
            ],
        }


def order_residuals(weights: ElementaryWeights, order: int) -> List[Tuple[RootedTree, Fraction]]:
    """Phi(t) - 1/gamma(t) for every tree of the given order."""
    return [
        (tree, weights.weight(tree) - Fraction(1, tree.density))
        for tree in trees_of_order(order)
    ]


def principal_error_norm(residuals: List[Tuple[RootedTree, Fraction]]) -> float:
    """sqrt of the exact sum of (residual / sigma)^2, rounded once."""
    total = sum((Fraction(r, tree.symmetry) ** 2 for tree, r in residuals), Fraction(0))
    return math.sqrt(float(total))


def classical_order(tableau: Tableau, cap: Optional[int] = None) -> OrderReport:
    """
    Largest p <= cap with Phi(t) = 1/gamma(t) for every tree of order <= p.

    Args:
        tableau: method to verify
        cap: highest order examined (default WSO_RK_ORDER_CAP)

    Raises:
        CapExceededError: cap above the tree enumeration bound.
        ValidationError: cap below 1.
    """
    cap = WsoConfig.ORDER_CAP if cap is None else cap
    if cap < 1:
        raise ValidationError(f"Order cap must be >= 1, got {cap}", field="cap")
    if cap > WsoConfig.TREE_MAX_ORDER:
        raise CapExceededError(
            f"Order cap {cap} exceeds {WsoConfig.TREE_MAX_ORDER}",
            cap=WsoConfig.TREE_MAX_ORDER,
            operation="classical_order",
        )

    weights = ElementaryWeights(tableau)
    D = coefficient_metrics(tableau).D
    p = 0
    for order in range(1, cap + 1):
        residuals = order_residuals(weights, order)
        if any(r != 0 for _, r in residuals):
            failing = [(tree, r) for tree, r in residuals if r != 0]
            logger.debug("%s: %d order-%d conditions fail", tableau.name, len(failing), order)
            return OrderReport(
                verified_order=p,
                failing_trees=failing,
                principal_error=principal_error_norm(residuals),
                D=D,
            )
        p = order

    report = OrderReport(verified_order=p, D=D, hit_cap=True)
    if p + 1 <= WsoConfig.TREE_MAX_ORDER:
        residuals = order_residuals(weights, p + 1)
        report.failing_trees = [(tree, r) for tree, r in residuals if r != 0]
        report.principal_error = principal_error_norm(residuals)
        report.hit_cap = not report.failing_trees
    return report
