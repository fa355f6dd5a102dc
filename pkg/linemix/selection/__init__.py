"""
linemix/selection
Model order selection (AIC / BIC / GIC).
"""

from linemix.selection.criteria import Criterion, CriterionKind, penalty
from linemix.selection.order import (
    OrderScore,
    OrderSelectionResult,
    fit_orders,
    score_orders,
    select_order,
)

__all__ = [
    "Criterion",
    "CriterionKind",
    "OrderScore",
    "OrderSelectionResult",
    "fit_orders",
    "penalty",
    "score_orders",
    "select_order",
]
