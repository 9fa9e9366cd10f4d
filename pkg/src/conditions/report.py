"""Full verification report for one tableau."""

import logging
from typing import Any, Dict, List, Optional

from config.settings import WsoConfig
from conditions.audit import audit_structure, necessary_conditions
from conditions.order import classical_order
from conditions.wso import wso
from tableau.analysis import linear_ssp_coefficient, nonnegativity_report, stability_polynomial
from tableau.model import Tableau
from utils.helpers import fraction_text

logger = logging.getLogger(__name__)


def metadata_mismatches(tableau: Tableau, order: int, q: Any, order_capped: bool = False) -> List[str]:
    """Claimed order that differs from the computed one, or a claimed WSO above it.

    A WSO claim is a lower bound: constructions guarantee q >= claimed. An
    order claim above a capped search was never examined and is not flagged.
    """
    mismatches = []
    unexamined = order_capped and tableau.claimed_order is not None and tableau.claimed_order > order
    if tableau.claimed_order is not None and tableau.claimed_order != order and not unexamined:
        mismatches.append(f"claimed order {tableau.claimed_order}, computed {order}")
    if tableau.claimed_wso is not None and q != "inf" and q < tableau.claimed_wso:
        mismatches.append(f"claimed wso {tableau.claimed_wso}, computed {q}")
    return mismatches


def verify_report(tableau: Tableau, max_order: Optional[int] = None, exact: bool = False) -> Dict[str, Any]:
    """
    Order, WSO, Krylov dimensions, stability polynomial, SSP data, the
    structural chain and the necessary conditions at the computed q.

    With ``exact`` the stability coefficients and D are emitted as rational
    text, otherwise as binary64.
    """
    order = classical_order(tableau, cap=max_order)
    analysis = wso(tableau, order=order.verified_order)
    polynomial = stability_polynomial(tableau)
    audit = audit_structure(tableau, order=order.verified_order, analysis=analysis)
    nonneg = nonnegativity_report(tableau)
    q = "inf" if analysis.infinite else analysis.q

    necessary = None
    if not analysis.infinite and 2 <= analysis.q <= tableau.s:
        necessary = necessary_conditions(tableau, analysis.q).to_dict()

    render = fraction_text if exact else float
    mismatches = metadata_mismatches(tableau, order.verified_order, q, order_capped=order.hit_cap)
    if mismatches:
        logger.warning("%s: metadata mismatch: %s", tableau.name, "; ".join(mismatches))

    return {
        "spec_version": WsoConfig.SPEC_VERSION,
        "name": tableau.name,
        "s": tableau.s,
        "order": order.verified_order,
        "order_hit_cap": order.hit_cap,
        "wso": q,
        "wso_lower_bound": analysis.q_lower_bound,
        "dim_Y": analysis.dim_Y,
        "dim_K_q": analysis.dim_K_q,
        "stability_coeffs": [render(value) for value in polynomial.trimmed()],
        "principal_error": order.principal_error,
        "D": render(order.D),
        "linear_ssp": linear_ssp_coefficient(polynomial) if polynomial.degree >= 1 else 0.0,
        "nonneg": {"A": nonneg.A_nonneg, "b": nonneg.b_nonneg},
        "bounds": audit.to_dict(),
        "necessary_conditions": necessary,
        "mismatches": mismatches,
    }
